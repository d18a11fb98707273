#pragma once

#include "ispoly/graph.hpp"
#include "ispoly/quad_ext.hpp"
#include "ispoly/rational.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ispoly {

/// Weights (B_k, C_k) of a pendant path of length k: attaching the path to a
/// vertex multiplies I by C_k and replaces that vertex's weight by B_k / C_k.
struct PathWeights {
    Rational b;
    Rational c;
    std::size_t k = 0;
};

/// (B_k, C_k) for uniform weight x, from (B_0, C_0) = (x, 1) and
/// (B, C) -> (x*C, B + C).
PathWeights path_weights(const Rational& x, std::size_t k);

/// Per-vertex variant for the path a_0 a_1 ... a_k with weights[j] on a_j,
/// folding from (weights[k], 1) towards the root a_0. weights must be nonempty.
PathWeights path_weights(std::span<const Rational> weights);

/// B_k and C_k from the eigenvalues of t^2 - t - x, as elements of
/// Q(sqrt(1 + 4x)). Requires x nondegenerate.
std::pair<QuadExt, QuadExt> path_weights_closed_form(const Rational& x, std::size_t k);

/// x > -1/4 and x != 0.
bool is_nondegenerate(const Rational& x);

/// lambda1^(s+2) != lambda2^(s+2) for every s in spec, decided in Q(sqrt(1+4x)).
bool is_compatible(const Rational& x, const CloneSpec& spec);

/// The point x(S) with x(S) + 1 = prod over s in S of (1 + B_s / C_s).
Rational x_of_S(const Rational& x, const CloneSpec& spec);

/// (prod over s in S of C_s)^n.
Rational clone_factor(const Rational& x, const CloneSpec& spec, std::size_t n);

enum class PlanStepKind { two_clone, comb };

struct PlanStep {
    PlanStepKind kind = PlanStepKind::two_clone;
    /// Leaves per vertex for a comb step; 0 for two_clone.
    std::size_t k = 0;
    /// Evaluation point reached after this step.
    Rational point;
};

/// Chain of point moves from source_point to a nondegenerate target_point.
///
/// Steps are listed in the order the point moves. Graph transformations are
/// applied in the reverse order (see apply_plan), so that
///     I(apply_plan(G); source_point) = factor(|V(G)|) * I(G; target_point).
struct TransformPlan {
    Rational source_point;
    std::vector<PlanStep> steps;
    Rational target_point;
    /// factor(n) = factor_base^(factor_exponent_per_vertex * n).
    Rational factor_base{1};
    std::size_t factor_exponent_per_vertex = 0;

    Rational factor(std::size_t original_vertex_count) const;
};

/// Moves x to a point nondegenerate for path reduction. Points 0, -1 and -2
/// are rejected.
TransformPlan normalize_point(const Rational& x);

Graph apply_plan(const Graph& g, const TransformPlan& plan);

std::string to_string(PlanStepKind kind);

} // namespace ispoly
