#pragma once

#include "ispoly/graph.hpp"
#include "ispoly/polynomial.hpp"
#include "ispoly/rational.hpp"

#include <cstddef>
#include <span>

namespace ispoly {

/// Resource bounds for the definitional evaluators. Exceeding one raises
/// CapacityError; nothing is ever truncated.
struct EvalLimits {
    /// Largest graph accepted by the subset-enumeration paths.
    std::size_t enumeration_max_vertices = 30;
    /// Largest memo table of the branching path.
    std::size_t max_branch_states = 2'000'000;
};

/// I(G; X) by the branching recursion
///     I(G) = I(G - v) + X * I(G - N[v])
/// with connected-component factorization and memoization on induced vertex
/// subsets of g. Branches on a vertex of maximum degree, smallest id first.
Polynomial isp_coeffs(const Graph& g, const EvalLimits& limits = {});

/// I(G; X) by enumerating every independent set. Bounded by
/// limits.enumeration_max_vertices.
Polynomial isp_coeffs_enumerate(const Graph& g, const EvalLimits& limits = {});

/// I(G; x), the same recursion as isp_coeffs carried out over Q at x.
Rational isp_eval(const Graph& g, const Rational& x, const EvalLimits& limits = {});

/// Sum over independent sets A of the product of weights[a], a in A, by direct
/// enumeration. weights must have one entry per vertex.
Rational isp_multivariate(const Graph& g, std::span<const Rational> weights, const EvalLimits& limits = {});

/// Number of independent sets of size exactly k (coefficient k of isp_coeffs).
Integer count_is_of_size(const Graph& g, std::size_t k, const EvalLimits& limits = {});

/// Same count by enumerating independent k-subsets directly.
Integer count_is_of_size_enumerate(const Graph& g, std::size_t k, const EvalLimits& limits = {});

} // namespace ispoly
