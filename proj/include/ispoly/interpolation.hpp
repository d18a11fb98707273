#pragma once

#include "ispoly/graph.hpp"
#include "ispoly/oracle.hpp"
#include "ispoly/polynomial.hpp"
#include "ispoly/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ispoly {

enum class DeltaMode {
    /// Start at spacing 1 and double until the points are exactly distinct.
    verified_minimal,
    /// Spacing from the analytic separation bound (base-2 logarithms).
    paper_formula,
};

/// Smallest s0 >= 1 such that (l1/l2)^s avoids (l2/l1)^2 and
/// l2(x + l2) / (l1(x + l1)) for every s >= s0, where l1 > l2 are the roots
/// of t^2 - t - x.
std::size_t compute_s0(const Rational& x);

/// Spacing of the clone family for n-vertex graphs.
///
/// In paper_formula mode this is the least integer strictly above
///   7((log n + 1) log(C2/C1) + 2 log n + 1) / log(l1/|l2|)
/// where C1 = min{1, |l1|, |l2|, |x+l1|, |x|, |l1-l2|} and
/// C2 = 2 max{1, |l1|, |l2|, |x+l1|, |x+l2|} are selected by exact comparison
/// and the logarithms are taken in long double. A relative margin of 1e-9 is
/// added before rounding up. verified_minimal mode returns 1.
std::size_t compute_delta(const Rational& x, std::size_t n, DeltaMode mode);

struct CloneFamily {
    Rational x;
    std::size_t n = 0;
    std::size_t s0 = 0;
    std::size_t delta = 0;
    /// sets[i] = {s0 + delta(2j + bit j of i) : 0 <= j <= floor(log2 n)}
    std::vector<CloneSpec> sets;
    /// points[i] = x(sets[i]), pairwise distinct.
    std::vector<Rational> points;
};

CloneFamily build_clone_family(const Rational& x, std::size_t n, DeltaMode mode = DeltaMode::verified_minimal);

struct Sample {
    Rational point;
    Rational value;
};

/// Unique polynomial of degree < samples.size() through the samples, in
/// Lagrange form. Points must be pairwise distinct.
Polynomial lagrange_interpolate(std::span<const Sample> samples);

/// Intermediate values of one interpolation run.
struct InterpolationTrace {
    CloneFamily family;
    std::vector<std::size_t> clone_vertices;
    std::vector<Rational> oracle_values;
    std::vector<Rational> factors;
    std::vector<Sample> samples;
    Polynomial coefficients;
};

/// Recovers I(g; X) from oracle values I(g_S; x) on the S-clones of g for the
/// clone family of n = |V(g)|. x must be nondegenerate.
InterpolationTrace interpolate_coeffs_traced(const Graph& g, const Rational& x, Oracle& oracle,
                                             DeltaMode mode = DeltaMode::verified_minimal);

Polynomial interpolate_coeffs(const Graph& g, const Rational& x, Oracle& oracle,
                              DeltaMode mode = DeltaMode::verified_minimal);

std::string to_string(DeltaMode mode);

} // namespace ispoly
