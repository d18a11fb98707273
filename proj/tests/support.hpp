#pragma once

// Brute-force reference implementations for the tests. Nothing here calls the
// library's evaluators or reductions.

#include "ispoly/cnf.hpp"
#include "ispoly/graph.hpp"
#include "ispoly/polynomial.hpp"
#include "ispoly/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace ispoly::testing {

inline Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
    return Graph(n, edges);
}

inline std::vector<std::uint64_t> neighbor_masks(const Graph& g)
{
    std::vector<std::uint64_t> masks(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        masks[e.u] |= std::uint64_t{1} << e.v;
        masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
}

inline bool is_independent(const std::vector<std::uint64_t>& masks, std::uint64_t set)
{
    for (std::size_t v = 0; v < masks.size(); ++v)
        if (((set >> v) & 1U) != 0 && (masks[v] & set) != 0)
            return false;
    return true;
}

/// Independent sets by size, over all 2^n subsets.
inline std::vector<Integer> brute_is_counts(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    const auto masks = neighbor_masks(g);
    std::vector<Integer> counts(n + 1, 0);
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set)
        if (is_independent(masks, set))
            counts[static_cast<std::size_t>(__builtin_popcountll(set))] += 1;
    return counts;
}

inline Polynomial brute_is_poly(const Graph& g)
{
    std::vector<Rational> coeffs;
    for (const auto& c : brute_is_counts(g))
        coeffs.emplace_back(c);
    return Polynomial(coeffs);
}

/// Sum over independent A of the product of weights[a], a in A.
inline Rational brute_multivariate(const Graph& g, const std::vector<Rational>& weights)
{
    const auto masks = neighbor_masks(g);
    Rational total(0);
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << g.vertex_count()); ++set) {
        if (!is_independent(masks, set))
            continue;
        Rational term(1);
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (((set >> v) & 1U) != 0)
                term *= weights[v];
        total += term;
    }
    return total;
}

inline Rational brute_eval(const Graph& g, const Rational& x)
{
    return brute_multivariate(g, std::vector<Rational>(g.vertex_count(), x));
}

inline int true_literals(const Clause& clause, std::uint64_t assignment)
{
    int count = 0;
    for (const auto& lit : clause)
        count += (((assignment >> (lit.variable - 1)) & 1U) != 0) != lit.negated ? 1 : 0;
    return count;
}

inline Integer brute_sat(const CnfFormula& f)
{
    Integer count = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variable_count()); ++a)
        if (std::all_of(f.clauses().begin(), f.clauses().end(),
                        [&](const Clause& c) { return true_literals(c, a) >= 1; }))
            count += 1;
    return count;
}

inline Integer brute_x3sat(const CnfFormula& f)
{
    Integer count = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variable_count()); ++a)
        if (std::all_of(f.clauses().begin(), f.clauses().end(),
                        [&](const Clause& c) { return true_literals(c, a) == 1; }))
            count += 1;
    return count;
}

/// Edge set of a graph on <= 8 vertices as a bitmask over vertex pairs.
inline std::uint64_t pair_bit(Vertex u, Vertex v)
{
    if (u > v)
        std::swap(u, v);
    return std::uint64_t{1} << (v * (v - 1) / 2 + u);
}

inline std::uint64_t edge_mask(const Graph& g, const std::vector<Vertex>& perm)
{
    std::uint64_t mask = 0;
    for (const auto& e : g.edges())
        mask |= pair_bit(perm[e.u], perm[e.v]);
    return mask;
}

/// Smallest edge mask over all relabelings; equal iff isomorphic.
inline std::uint64_t canonical_mask(const Graph& g)
{
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, edge_mask(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_mask(a) == canonical_mask(b);
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if ((mask & pair_bit(u, v)) != 0)
                edges.push_back({u, v});
    return Graph(n, edges);
}

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<Graph> nonisomorphic_graphs(std::size_t n)
{
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (seen.insert(canonical_mask(g)).second)
            out.push_back(std::move(g));
    }
    return out;
}

/// Representatives of every class on 0..max_n vertices, smallest first.
inline const std::vector<Graph>& small_graphs(std::size_t max_n = 6)
{
    static std::map<std::size_t, std::vector<Graph>> cache;
    auto it = cache.find(max_n);
    if (it == cache.end()) {
        std::vector<Graph> all;
        for (std::size_t n = 0; n <= max_n; ++n)
            for (auto& g : nonisomorphic_graphs(n))
                all.push_back(std::move(g));
        it = cache.emplace(max_n, std::move(all)).first;
    }
    return it->second;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
    return Graph(g.vertex_count(), edges);
}

inline const std::vector<Rational>& sample_points()
{
    static const std::vector<Rational> points{Rational(2), Rational(1), Rational(1, 2), Rational(-1, 5)};
    return points;
}

/// Every multiset of size 1..max_size with entries in 0..max_entry.
inline std::vector<CloneSpec> all_clone_specs(std::size_t max_size, std::size_t max_entry)
{
    std::vector<CloneSpec> out;
    std::vector<std::size_t> current;
    auto extend = [&](auto&& self, std::size_t min_entry) -> void {
        if (!current.empty())
            out.emplace_back(current);
        if (current.size() == max_size)
            return;
        for (std::size_t e = min_entry; e <= max_entry; ++e) {
            current.push_back(e);
            self(self, e);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

/// (B, C) from the 2x2 transfer matrix [[0, x], [1, 1]] applied k times.
inline std::pair<Rational, Rational> matrix_path_weights(const Rational& x, std::size_t k)
{
    Rational b = x, c(1);
    for (std::size_t i = 0; i < k; ++i) {
        Rational nb = x * c;
        Rational nc = b + c;
        b = nb;
        c = nc;
    }
    return {b, c};
}

} // namespace ispoly::testing
