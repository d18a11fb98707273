#include "ispoly/clone_calculus.hpp"

#include "ispoly/errors.hpp"

namespace ispoly {

namespace {

void require_nondegenerate(const Rational& x)
{
    if (!is_nondegenerate(x))
        throw DomainError("point " + x.to_string() + " is degenerate for path reduction (need x > -1/4 and x != 0)");
}

} // namespace

PathWeights path_weights(const Rational& x, std::size_t k)
{
    PathWeights w{x, Rational(1), 0};
    for (; w.k < k; ++w.k) {
        Rational b = x * w.c;
        w.c += w.b;
        w.b = std::move(b);
    }
    return w;
}

PathWeights path_weights(std::span<const Rational> weights)
{
    if (weights.empty())
        throw DomainError("a path needs at least its root vertex");
    const std::size_t k = weights.size() - 1;
    PathWeights w{weights[k], Rational(1), 0};
    for (; w.k < k; ++w.k) {
        Rational b = weights[k - w.k - 1] * w.c;
        w.c += w.b;
        w.b = std::move(b);
    }
    return w;
}

std::pair<QuadExt, QuadExt> path_weights_closed_form(const Rational& x, std::size_t k)
{
    auto [l1, l2] = lambda_pair(x);
    const QuadExt gap = l2 - l1;
    QuadExt b = QuadExt::rational(x, l1.d()) * (l2.pow(k + 1) - l1.pow(k + 1)) / gap;
    QuadExt c = (l2.pow(k + 2) - l1.pow(k + 2)) / gap;
    return {b, c};
}

bool is_nondegenerate(const Rational& x)
{
    return !x.is_zero() && x > Rational(-1, 4);
}

bool is_compatible(const Rational& x, const CloneSpec& spec)
{
    require_nondegenerate(x);
    auto [l1, l2] = lambda_pair(x);
    for (std::size_t s : spec.entries())
        if (l1.pow(s + 2) == l2.pow(s + 2))
            return false;
    return true;
}

Rational x_of_S(const Rational& x, const CloneSpec& spec)
{
    require_nondegenerate(x);
    Rational product(1);
    for (std::size_t s : spec.entries()) {
        PathWeights w = path_weights(x, s);
        if (w.c.is_zero())
            throw DomainError("clone spec incompatible with " + x.to_string() + ": C_" + std::to_string(s) + " = 0");
        Rational factor = Rational(1) + w.b / w.c;
        if (factor.is_zero())
            throw DomainError("path factor 1 + B_" + std::to_string(s) + "/C_" + std::to_string(s) + " vanishes at " +
                              x.to_string());
        product *= factor;
    }
    return product - Rational(1);
}

Rational clone_factor(const Rational& x, const CloneSpec& spec, std::size_t n)
{
    require_nondegenerate(x);
    Rational product(1);
    for (std::size_t s : spec.entries()) {
        PathWeights w = path_weights(x, s);
        if (w.c.is_zero())
            throw DomainError("clone spec incompatible with " + x.to_string() + ": C_" + std::to_string(s) + " = 0");
        product *= w.c;
    }
    return product.pow(static_cast<long>(n));
}

Rational TransformPlan::factor(std::size_t original_vertex_count) const
{
    return factor_base.pow(static_cast<long>(factor_exponent_per_vertex * original_vertex_count));
}

TransformPlan normalize_point(const Rational& x)
{
    if (x.is_zero() || x == Rational(-1) || x == Rational(-2))
        throw DomainError("point " + x.to_string() +
                          " is not supported: 0, -1 and -2 need the cycle gadgets, which are not implemented");
    TransformPlan plan;
    plan.source_point = x;
    Rational point = x;
    if (!is_nondegenerate(x) && x > Rational(-2)) {
        // Here |1 + x| < 1, so x / (1 + x)^k decreases without bound over even k.
        const Rational base = Rational(1) + x;
        std::size_t k = 2;
        while (x / base.pow(static_cast<long>(k)) >= Rational(-2))
            k += 2;
        point = x / base.pow(static_cast<long>(k));
        plan.steps.push_back({PlanStepKind::comb, k, point});
        plan.factor_base = base;
        // The comb is applied to the 2-clone, which has 2n vertices.
        plan.factor_exponent_per_vertex = 2 * k;
    }
    if (!is_nondegenerate(point)) {
        Rational shifted = Rational(1) + point;
        point = shifted * shifted - Rational(1);
        plan.steps.push_back({PlanStepKind::two_clone, 0, point});
    }
    plan.target_point = point;
    return plan;
}

Graph apply_plan(const Graph& g, const TransformPlan& plan)
{
    Graph out = g;
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it)
        out = it->kind == PlanStepKind::two_clone ? k_clone(out, 2) : comb(out, it->k);
    return out;
}

std::string to_string(PlanStepKind kind)
{
    return kind == PlanStepKind::two_clone ? "two_clone" : "comb";
}

} // namespace ispoly
