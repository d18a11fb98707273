#include "ispoly/interpolation.hpp"

#include "ispoly/clone_calculus.hpp"
#include "ispoly/errors.hpp"
#include "ispoly/quad_ext.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace ispoly {

namespace {

void require_nondegenerate(const Rational& x)
{
    if (!is_nondegenerate(x))
        throw DomainError("point " + x.to_string() + " is degenerate for path reduction (need x > -1/4 and x != 0)");
}

const QuadExt& max_of(std::initializer_list<const QuadExt*> values)
{
    const QuadExt* best = *values.begin();
    for (const QuadExt* v : values)
        if (*v > *best)
            best = v;
    return *best;
}

const QuadExt& min_of(std::initializer_list<const QuadExt*> values)
{
    const QuadExt* best = *values.begin();
    for (const QuadExt* v : values)
        if (*v < *best)
            best = v;
    return *best;
}

std::size_t floor_log2(std::size_t n)
{
    return static_cast<std::size_t>(std::bit_width(n)) - 1;
}

bool pairwise_distinct(std::vector<Rational> values)
{
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

std::vector<CloneSpec> family_sets(std::size_t n, std::size_t s0, std::size_t delta)
{
    const std::size_t bits = floor_log2(n) + 1;
    std::vector<CloneSpec> sets;
    sets.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> entries;
        for (std::size_t j = 0; j < bits; ++j)
            entries.push_back(s0 + delta * (2 * j + ((i >> j) & 1U)));
        sets.emplace_back(std::move(entries));
    }
    return sets;
}

// Re-raises a failure of clone `index` with the index in the message,
// keeping the error category.
[[noreturn]] void rethrow_for_clone(std::size_t index)
{
    const std::string prefix = "clone " + std::to_string(index) + ": ";
    try {
        throw;
    } catch (const CapacityError& e) {
        throw CapacityError(prefix + e.what());
    } catch (const ProtocolError& e) {
        throw ProtocolError(prefix + e.what());
    } catch (const IoError& e) {
        throw IoError(prefix + e.what());
    } catch (const DomainError& e) {
        throw DomainError(prefix + e.what());
    }
}

} // namespace

std::size_t compute_s0(const Rational& x)
{
    require_nondegenerate(x);
    auto [l1, l2] = lambda_pair(x);
    const QuadExt xq = QuadExt::rational(x, l1.d());
    const QuadExt ratio = l1 / l2;
    const QuadExt avoid_square = (l2 / l1).pow(2);
    const QuadExt avoid_mixed = l2 * (xq + l2) / (l1 * (xq + l1));
    if (ratio.abs() <= QuadExt::rational(Rational(1), l1.d()))
        throw DomainError("|l1/l2| <= 1 at " + x.to_string());
    // |ratio|^s grows monotonically, so once it passes both targets in
    // magnitude no later power can hit them.
    const QuadExt abs_square = avoid_square.abs(), abs_mixed = avoid_mixed.abs();
    const QuadExt bound = max_of({&abs_square, &abs_mixed});
    std::size_t s0 = 1;
    QuadExt power = ratio;
    for (std::size_t s = 1; power.abs() <= bound; ++s) {
        if (power == avoid_square || power == avoid_mixed)
            s0 = s + 1;
        power *= ratio;
    }
    return s0;
}

std::size_t compute_delta(const Rational& x, std::size_t n, DeltaMode mode)
{
    require_nondegenerate(x);
    if (n == 0)
        throw DomainError("clone family needs n >= 1");
    if (mode == DeltaMode::verified_minimal)
        return 1;

    auto [l1, l2] = lambda_pair(x);
    const Rational& d = l1.d();
    const QuadExt one = QuadExt::rational(Rational(1), d);
    const QuadExt xq = QuadExt::rational(x, d);
    const QuadExt a1 = l1.abs(), a2 = l2.abs(), xl1 = (xq + l1).abs(), xl2 = (xq + l2).abs();
    const QuadExt ax = xq.abs(), gap = (l1 - l2).abs();
    const QuadExt c1 = min_of({&one, &a1, &a2, &xl1, &ax, &gap});
    const QuadExt c2 = QuadExt::rational(Rational(2), d) * max_of({&one, &a1, &a2, &xl1, &xl2});

    const long double log_n = std::log2(static_cast<long double>(n));
    const long double log_c = std::log2(static_cast<long double>((c2 / c1).to_double()));
    const long double log_ratio = std::log2(static_cast<long double>((a1 / a2).to_double()));
    const long double bound = 7.0L * ((log_n + 1.0L) * log_c + 2.0L * log_n + 1.0L) / log_ratio;
    const long double margin = 1e-9L * std::max(1.0L, std::fabs(bound));
    return static_cast<std::size_t>(std::floor(bound + margin)) + 1;
}

CloneFamily build_clone_family(const Rational& x, std::size_t n, DeltaMode mode)
{
    require_nondegenerate(x);
    if (n == 0)
        throw DomainError("clone family needs n >= 1");
    CloneFamily family;
    family.x = x;
    family.n = n;
    family.s0 = compute_s0(x);
    family.delta = compute_delta(x, n, mode);
    const std::size_t witness = mode == DeltaMode::paper_formula ? family.delta
                                                                 : compute_delta(x, n, DeltaMode::paper_formula);
    for (;;) {
        family.sets = family_sets(n, family.s0, family.delta);
        family.points.clear();
        for (const auto& spec : family.sets)
            family.points.push_back(x_of_S(x, spec));
        if (pairwise_distinct(family.points))
            return family;
        if (family.delta >= witness)
            throw DomainError("clone family points collide at spacing " + std::to_string(family.delta) +
                              ", which is above the separation bound " + std::to_string(witness));
        family.delta *= 2;
    }
}

Polynomial lagrange_interpolate(std::span<const Sample> samples)
{
    if (samples.empty())
        throw DomainError("interpolation needs at least one sample");
    std::vector<Rational> xs;
    for (const auto& s : samples)
        xs.push_back(s.point);
    if (!pairwise_distinct(xs))
        throw DomainError("interpolation points are not pairwise distinct");

    Polynomial result;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        Polynomial basis = Polynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * Polynomial::linear_factor(samples[j].point);
            denom *= samples[i].point - samples[j].point;
        }
        result += basis * (samples[i].value / denom);
    }
    return result;
}

InterpolationTrace interpolate_coeffs_traced(const Graph& g, const Rational& x, Oracle& oracle, DeltaMode mode)
{
    const std::size_t n = g.vertex_count();
    InterpolationTrace trace;
    // An empty graph still gets a two-point family; the constant falls out.
    trace.family = build_clone_family(x, std::max<std::size_t>(n, 1), mode);
    for (std::size_t i = 0; i < trace.family.sets.size(); ++i) {
        const CloneSpec& spec = trace.family.sets[i];
        const std::size_t size = n * spec.block_size();
        trace.clone_vertices.push_back(size);
        if (oracle.max_vertices && size > *oracle.max_vertices)
            throw CapacityError("clone " + std::to_string(i) + ": " + std::to_string(size) +
                                " vertices exceed the oracle limit of " + std::to_string(*oracle.max_vertices));
        Rational value;
        try {
            value = oracle.evaluate(s_clone(g, spec), x, i);
        } catch (const Error&) {
            rethrow_for_clone(i);
        }
        Rational factor = clone_factor(x, spec, n);
        trace.oracle_values.push_back(value);
        trace.factors.push_back(factor);
        trace.samples.push_back({trace.family.points[i], value / factor});
    }
    trace.coefficients = lagrange_interpolate(trace.samples);
    return trace;
}

Polynomial interpolate_coeffs(const Graph& g, const Rational& x, Oracle& oracle, DeltaMode mode)
{
    return interpolate_coeffs_traced(g, x, oracle, mode).coefficients;
}

std::string to_string(DeltaMode mode)
{
    return mode == DeltaMode::verified_minimal ? "verified" : "paper";
}

} // namespace ispoly
