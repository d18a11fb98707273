#include "ispoly/isp_eval.hpp"

#include "ispoly/errors.hpp"
#include "vertex_set.hpp"

#include <unordered_map>

namespace ispoly {

namespace {

using detail::VertexSet;
using detail::VertexSetHash;

// Integer coefficient vector, lowest degree first.
struct CoefficientRing {
    using Value = std::vector<Integer>;

    Value one() const { return {Integer(1)}; }
    Value singleton() const { return {Integer(1), Integer(1)}; }

    // without + X * with
    Value branch(Value without, const Value& with) const
    {
        if (without.size() < with.size() + 1)
            without.resize(with.size() + 1, Integer(0));
        for (std::size_t i = 0; i < with.size(); ++i)
            without[i + 1] += with[i];
        return without;
    }

    Value mul(const Value& a, const Value& b) const
    {
        Value out(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        return out;
    }
};

struct PointRing {
    using Value = Rational;
    Rational x;

    Value one() const { return Rational(1); }
    Value singleton() const { return Rational(1) + x; }
    Value branch(Value without, const Value& with) const { return without += x * with; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
};

template <class Ring>
class Brancher {
public:
    using Value = typename Ring::Value;

    Brancher(const Graph& g, Ring ring, std::size_t max_states)
        : universe_(g.vertex_count()), ring_(std::move(ring)), max_states_(max_states)
    {
        adj_.assign(universe_, VertexSet(universe_));
        for (const Edge& e : g.edges()) {
            adj_[e.u].insert(e.v);
            adj_[e.v].insert(e.u);
        }
    }

    Value run() { return solve(VertexSet::full(universe_)); }

private:
    Value solve(const VertexSet& s)
    {
        if (s.empty())
            return ring_.one();
        if (auto it = memo_.find(s); it != memo_.end())
            return it->second;

        VertexSet comp = component_of(s.first(), s);
        Value result;
        if (comp != s) {
            VertexSet rest = s;
            rest -= comp;
            result = ring_.mul(solve(comp), solve(rest));
        } else if (s.count() == 1) {
            result = ring_.singleton();
        } else {
            std::size_t v = branch_vertex(s);
            VertexSet without = s;
            without.erase(v);
            VertexSet with = without;
            with -= adj_[v];
            result = ring_.branch(solve(without), solve(with));
        }
        if (memo_.size() >= max_states_)
            throw CapacityError("branching evaluator exceeded " + std::to_string(max_states_) +
                                " memoized states on a " + std::to_string(universe_) + "-vertex graph");
        memo_.emplace(s, result);
        return result;
    }

    VertexSet component_of(std::size_t start, const VertexSet& s) const
    {
        VertexSet comp(universe_);
        comp.insert(start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(universe_);
            frontier.for_each([&](std::size_t v) { next |= adj_[v]; });
            next &= s;
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        return comp;
    }

    std::size_t branch_vertex(const VertexSet& s) const
    {
        std::size_t best = 0, best_degree = 0;
        bool found = false;
        s.for_each([&](std::size_t v) {
            std::size_t d = adj_[v].count_and(s);
            if (!found || d > best_degree) {
                best = v;
                best_degree = d;
                found = true;
            }
        });
        return best;
    }

    std::size_t universe_;
    Ring ring_;
    std::size_t max_states_;
    std::vector<VertexSet> adj_;
    std::unordered_map<VertexSet, Value, VertexSetHash> memo_;
};

void require_enumerable(const Graph& g, const EvalLimits& limits)
{
    if (g.vertex_count() > limits.enumeration_max_vertices)
        throw CapacityError("enumeration bound is " + std::to_string(limits.enumeration_max_vertices) +
                            " vertices, graph has " + std::to_string(g.vertex_count()));
}

// Depth-first walk over all independent sets. enter(v) and leave(v) bracket
// the inclusion of v; done() fires once per set.
class IndependentSetWalker {
public:
    explicit IndependentSetWalker(const Graph& g) : n_(g.vertex_count()), adj_(g.adjacency()) {}

    template <class Enter, class Leave, class Done>
    void walk(Enter&& enter, Leave&& leave, Done&& done)
    {
        std::vector<int> blocked(n_, 0);
        step(0, blocked, enter, leave, done);
    }

private:
    template <class Enter, class Leave, class Done>
    void step(Vertex v, std::vector<int>& blocked, Enter& enter, Leave& leave, Done& done)
    {
        if (v == n_) {
            done();
            return;
        }
        step(v + 1, blocked, enter, leave, done);
        if (blocked[v] != 0)
            return;
        for (Vertex w : adj_[v])
            ++blocked[w];
        enter(v);
        step(v + 1, blocked, enter, leave, done);
        leave(v);
        for (Vertex w : adj_[v])
            --blocked[w];
    }

    std::size_t n_;
    std::vector<std::vector<Vertex>> adj_;
};

} // namespace

Polynomial isp_coeffs(const Graph& g, const EvalLimits& limits)
{
    Brancher<CoefficientRing> brancher(g, CoefficientRing{}, limits.max_branch_states);
    auto counts = brancher.run();
    std::vector<Rational> coeffs(counts.begin(), counts.end());
    return Polynomial(std::move(coeffs));
}

Polynomial isp_coeffs_enumerate(const Graph& g, const EvalLimits& limits)
{
    require_enumerable(g, limits);
    std::vector<Integer> counts(g.vertex_count() + 1, Integer(0));
    std::size_t size = 0;
    IndependentSetWalker(g).walk([&](Vertex) { ++size; }, [&](Vertex) { --size; }, [&] { ++counts[size]; });
    return Polynomial(std::vector<Rational>(counts.begin(), counts.end()));
}

Rational isp_eval(const Graph& g, const Rational& x, const EvalLimits& limits)
{
    Brancher<PointRing> brancher(g, PointRing{x}, limits.max_branch_states);
    return brancher.run();
}

Rational isp_multivariate(const Graph& g, std::span<const Rational> weights, const EvalLimits& limits)
{
    if (weights.size() != g.vertex_count())
        throw DomainError("expected " + std::to_string(g.vertex_count()) + " vertex weights, got " +
                          std::to_string(weights.size()));
    require_enumerable(g, limits);
    Rational total;
    std::vector<Rational> products{Rational(1)};
    IndependentSetWalker(g).walk([&](Vertex v) { products.push_back(products.back() * weights[v]); },
                                 [&](Vertex) { products.pop_back(); }, [&] { total += products.back(); });
    return total;
}

Integer count_is_of_size(const Graph& g, std::size_t k, const EvalLimits& limits)
{
    return isp_coeffs(g, limits).coefficient(k).numerator();
}

Integer count_is_of_size_enumerate(const Graph& g, std::size_t k, const EvalLimits& limits)
{
    require_enumerable(g, limits);
    const std::size_t n = g.vertex_count();
    if (k > n)
        return Integer(0);
    const auto adj = g.adjacency();
    Integer count(0);
    std::vector<int> blocked(n, 0);
    // Choose the members of a k-subset in increasing order.
    auto choose = [&](auto& self, Vertex from, std::size_t remaining) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (Vertex v = from; v + remaining <= n; ++v) {
            if (blocked[v] != 0)
                continue;
            for (Vertex w : adj[v])
                ++blocked[w];
            self(self, v + 1, remaining - 1);
            for (Vertex w : adj[v])
                --blocked[w];
        }
    };
    choose(choose, 0, k);
    return count;
}

} // namespace ispoly
