#include "ispoly/cnf.hpp"

#include "ispoly/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>

namespace ispoly {

CnfFormula::CnfFormula(std::size_t variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses))
{
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        Clause& clause = clauses_[i];
        if (clause.empty())
            throw DomainError("clause " + std::to_string(i + 1) + " is empty");
        Clause kept;
        for (const Literal& lit : clause) {
            if (lit.variable == 0 || lit.variable > variable_count_)
                throw DomainError("clause " + std::to_string(i + 1) + ": variable " +
                                  std::to_string(lit.variable) + " outside 1.." + std::to_string(variable_count_));
            if (std::find(kept.begin(), kept.end(), lit) == kept.end())
                kept.push_back(lit);
        }
        clause = std::move(kept);
    }
}

std::size_t CnfFormula::literal_count() const
{
    std::size_t total = 0;
    for (const auto& c : clauses_)
        total += c.size();
    return total;
}

std::size_t CnfFormula::unused_variable_count() const
{
    std::vector<bool> used(variable_count_ + 1, false);
    for (const auto& c : clauses_)
        for (const auto& lit : c)
            used[lit.variable] = true;
    return static_cast<std::size_t>(std::count(used.begin() + 1, used.end(), false));
}

CnfFormula parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::optional<std::size_t> n, m;
    std::vector<Clause> clauses;
    Clause current;
    std::size_t line_no = 0, clause_start = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream words(line);
        std::string first;
        if (!(words >> first) || first == "c")
            continue;
        if (first[0] == '%')
            break;
        if (first == "p") {
            if (n)
                throw ParseError(line_no, "second header line");
            std::string format, extra;
            long long nv = -1, nc = -1;
            if (!(words >> format >> nv >> nc) || format != "cnf" || nv < 0 || nc < 0 || (words >> extra))
                throw ParseError(line_no, "malformed header, expected 'p cnf n m'");
            n = static_cast<std::size_t>(nv);
            m = static_cast<std::size_t>(nc);
            continue;
        }
        if (!n)
            throw ParseError(line_no, "clause data before header 'p cnf n m'");
        std::istringstream tokens(line);
        for (std::string tok; tokens >> tok;) {
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(line_no, "expected a literal, got '" + tok + "'");
            }
            if (lit == 0) {
                if (current.empty())
                    throw ParseError(line_no, "empty clause");
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > *n)
                throw ParseError(line_no, "literal " + tok + " out of range for " + std::to_string(*n) + " variables");
            if (current.empty())
                clause_start = line_no;
            current.push_back(Literal::from_dimacs(lit));
        }
    }
    if (!n)
        throw ParseError(line_no, "missing header 'p cnf n m'");
    if (!current.empty())
        throw ParseError(clause_start, "clause not terminated by 0");
    if (clauses.size() != *m)
        throw ParseError(line_no, "header declares " + std::to_string(*m) + " clauses, found " +
                                      std::to_string(clauses.size()));
    return CnfFormula(*n, std::move(clauses));
}

std::string to_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.variable_count() << ' ' << f.clause_count() << '\n';
    for (const auto& clause : f.clauses()) {
        for (const auto& lit : clause)
            out << lit.to_dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

namespace {

struct ClauseMasks {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
};

std::vector<ClauseMasks> clause_masks(const CnfFormula& f, const SatLimits& limits)
{
    std::size_t bound = std::min<std::size_t>(limits.max_variables, 62);
    if (f.variable_count() > bound)
        throw CapacityError("exhaustive counting is limited to " + std::to_string(bound) +
                            " variables, formula has " + std::to_string(f.variable_count()));
    std::vector<ClauseMasks> masks;
    for (const auto& clause : f.clauses()) {
        ClauseMasks cm;
        for (const auto& lit : clause)
            (lit.negated ? cm.negative : cm.positive) |= std::uint64_t{1} << (lit.variable - 1);
        masks.push_back(cm);
    }
    return masks;
}

// Number of true literals; exact because clauses hold no repeated literal.
int true_literals(const ClauseMasks& cm, std::uint64_t assignment)
{
    return std::popcount(assignment & cm.positive) + std::popcount(~assignment & cm.negative);
}

template <class Accept>
Integer count_assignments(const CnfFormula& f, const SatLimits& limits, Accept accept)
{
    const auto masks = clause_masks(f, limits);
    const std::uint64_t total = std::uint64_t{1} << f.variable_count();
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool ok = true;
        for (const auto& cm : masks) {
            if (!accept(true_literals(cm, a))) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
    }
    return Integer(static_cast<unsigned long>(count));
}

} // namespace

Integer count_sat(const CnfFormula& f, const SatLimits& limits)
{
    return count_assignments(f, limits, [](int t) { return t > 0; });
}

Integer count_x3sat(const CnfFormula& f, const SatLimits& limits)
{
    for (std::size_t i = 0; i < f.clause_count(); ++i) {
        std::size_t w = f.clauses()[i].size();
        if (w != 2 && w != 3)
            throw DomainError("X3SAT clause " + std::to_string(i + 1) + " has width " + std::to_string(w) +
                              ", expected 2 or 3");
    }
    return count_assignments(f, limits, [](int t) { return t == 1; });
}

void validate_x3sat(const CnfFormula& f)
{
    for (std::size_t i = 0; i < f.clause_count(); ++i) {
        const Clause& c = f.clauses()[i];
        if (c.size() != 2 && c.size() != 3)
            throw DomainError("X3SAT clause " + std::to_string(i + 1) + " has width " + std::to_string(c.size()) +
                              ", expected 2 or 3");
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b) {
                if (c[a] == c[b])
                    throw DomainError("X3SAT clause " + std::to_string(i + 1) + " repeats literal " + to_string(c[a]));
                if (c[a] == ~c[b])
                    throw DomainError("X3SAT clause " + std::to_string(i + 1) + " contains " + to_string(c[a]) +
                                      " and its negation");
            }
    }
}

CnfFormula schaefer_reduce(const CnfFormula& f)
{
    const std::size_t n = f.variable_count();
    std::vector<Clause> out;
    out.reserve(5 * f.clause_count());
    for (std::size_t i = 0; i < f.clause_count(); ++i) {
        const Clause& c = f.clauses()[i];
        if (c.size() > 3)
            throw DomainError("clause " + std::to_string(i + 1) + " has width " + std::to_string(c.size()) +
                              "; the reduction takes 3-CNF");
        const Literal a = c[0];
        const Literal b = c.size() > 1 ? c[1] : a;
        const Literal cc = c.size() > 2 ? c[2] : b;
        auto u = [&](std::uint32_t j) { return Literal{static_cast<std::uint32_t>(n + 6 * i + j), false}; };
        out.push_back({a, u(1), u(4)});
        out.push_back({b, u(2), u(4)});
        out.push_back({u(1), u(2), u(5)});
        out.push_back({u(3), u(4), u(6)});
        out.push_back({cc, u(3)});
    }
    return CnfFormula(n + 6 * f.clause_count(), std::move(out));
}

X3satGraph x3sat_to_graph(const CnfFormula& f)
{
    validate_x3sat(f);
    std::vector<std::optional<Literal>> labels;
    std::vector<std::size_t> clause_of;
    std::vector<std::vector<Vertex>> members(f.clause_count());
    for (std::size_t i = 0; i < f.clause_count(); ++i)
        for (const auto& lit : f.clauses()[i]) {
            members[i].push_back(labels.size());
            clause_of.push_back(i);
            labels.emplace_back(lit);
        }
    const std::size_t n = labels.size();

    std::set<std::pair<Vertex, Vertex>> edges;
    auto join = [&](Vertex u, Vertex v) { edges.insert({std::min(u, v), std::max(u, v)}); };
    auto partners = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : members[clause_of[v]])
            if (w != v)
                out.push_back(w);
        return out;
    };

    for (const auto& clique : members)
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                join(clique[a], clique[b]);

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (clause_of[u] == clause_of[v])
                continue;
            if (*labels[u] == *labels[v]) {
                for (Vertex w : partners(v))
                    join(u, w);
                for (Vertex w : partners(u))
                    join(v, w);
            } else if (*labels[u] == ~*labels[v]) {
                join(u, v);
                for (Vertex a : partners(u))
                    for (Vertex b : partners(v))
                        join(a, b);
            }
        }

    std::vector<Edge> edge_list;
    edge_list.reserve(edges.size());
    for (auto [u, v] : edges)
        edge_list.push_back({u, v});

    X3satGraph result;
    result.graph = Graph(n, std::move(edge_list), std::move(labels));
    result.target_size = f.clause_count();
    mpz_ui_pow_ui(result.multiplier.get_mpz_t(), 2, f.unused_variable_count());
    return result;
}

Integer count_solutions(const X3satGraph& reduced, const EvalLimits& limits)
{
    return count_is_of_size(reduced.graph, reduced.target_size, limits) * reduced.multiplier;
}

Integer sat_count_via_is(const CnfFormula& f, const EvalLimits& limits)
{
    return count_solutions(x3sat_to_graph(schaefer_reduce(f)), limits);
}

ReductionChain reduce_chain(const CnfFormula& f)
{
    CnfFormula x3sat = schaefer_reduce(f);
    X3satGraph reduced = x3sat_to_graph(x3sat);
    ReductionReport report{f.clause_count(), x3sat.clause_count(), x3sat.variable_count(),
                           reduced.graph.vertex_count(), reduced.target_size, reduced.multiplier};
    return ReductionChain{std::move(x3sat), std::move(reduced), std::move(report)};
}

ReductionChain reduce_x3sat_chain(const CnfFormula& f)
{
    X3satGraph reduced = x3sat_to_graph(f);
    ReductionReport report{f.clause_count(), f.clause_count(), f.variable_count(),
                           reduced.graph.vertex_count(), reduced.target_size, reduced.multiplier};
    return ReductionChain{f, std::move(reduced), std::move(report)};
}

} // namespace ispoly
