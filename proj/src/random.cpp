#include "ispoly/random.hpp"

#include "ispoly/errors.hpp"

#include <algorithm>
#include <limits>

namespace ispoly {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw DomainError("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

Graph random_graph(Rng& rng, std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.coin())
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

CnfFormula random_3cnf(Rng& rng, std::size_t n, std::size_t m)
{
    if (n == 0 && m > 0)
        throw DomainError("clauses need variables");
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < m; ++i) {
        Clause c;
        std::size_t width = rng.between(1, 3);
        for (std::size_t j = 0; j < width; ++j)
            c.push_back(Literal{static_cast<std::uint32_t>(rng.between(1, n)), rng.coin()});
        clauses.push_back(std::move(c));
    }
    return CnfFormula(n, std::move(clauses));
}

CnfFormula random_x3sat(Rng& rng, std::size_t n, std::size_t max_total_width)
{
    if (n < 3)
        throw DomainError("random X3SAT instances need at least 3 variables");
    std::vector<Clause> clauses;
    std::size_t budget = rng.between(0, max_total_width);
    while (budget >= 2) {
        std::size_t width = budget >= 3 ? rng.between(2, 3) : 2;
        std::vector<std::uint32_t> vars;
        while (vars.size() < width) {
            auto v = static_cast<std::uint32_t>(rng.between(1, n));
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
        }
        Clause c;
        for (auto v : vars)
            c.push_back(Literal{v, rng.coin()});
        clauses.push_back(std::move(c));
        budget -= width;
    }
    return CnfFormula(n, std::move(clauses));
}

CloneSpec random_clone_spec(Rng& rng, std::size_t max_size, std::size_t max_entry)
{
    std::vector<std::size_t> entries(rng.between(1, max_size));
    for (auto& e : entries)
        e = rng.between(0, max_entry);
    return CloneSpec(std::move(entries));
}

} // namespace ispoly
