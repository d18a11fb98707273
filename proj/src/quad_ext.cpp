#include "ispoly/quad_ext.hpp"

#include "ispoly/errors.hpp"

#include <cmath>

namespace ispoly {

namespace {

Sign to_sign(int s)
{
    return s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero;
}

} // namespace

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d))
{
    if (d_.sign() < 0)
        throw DomainError("negative discriminant " + d_.to_string());
}

void QuadExt::require_same_field(const QuadExt& rhs) const
{
    if (d_ != rhs.d_)
        throw DomainError("mismatched discriminants " + d_.to_string() + " and " + rhs.d_.to_string());
}

Sign QuadExt::sign() const
{
    int sa = a_.sign();
    int sb = d_.is_zero() ? 0 : b_.sign();
    if (sb == 0)
        return to_sign(sa);
    if (sa == 0)
        return to_sign(sb);
    if (sa == sb)
        return to_sign(sa);
    // Opposite signs: the term with larger square wins.
    auto order = a_ * a_ <=> b_ * b_ * d_;
    int c = order < 0 ? -1 : order > 0 ? 1 : 0;
    return to_sign(c * sa);
}

QuadExt QuadExt::abs() const
{
    return sign() == Sign::negative ? -*this : *this;
}

QuadExt QuadExt::pow(unsigned long exponent) const
{
    QuadExt result = rational(Rational(1), d_);
    QuadExt base = *this;
    while (exponent > 0) {
        if (exponent & 1UL)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

std::optional<Rational> QuadExt::to_rational() const
{
    if (b_.is_zero())
        return a_;
    if (auto root = d_.exact_sqrt())
        return a_ + b_ * *root;
    return std::nullopt;
}

double QuadExt::to_double() const
{
    return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs)
{
    require_same_field(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs)
{
    require_same_field(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs)
{
    require_same_field(rhs);
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs)
{
    require_same_field(rhs);
    if (rhs.is_zero())
        throw DomainError("division by zero in Q(sqrt(" + d_.to_string() + "))");
    Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * d_;
    if (norm.is_zero()) {
        // Nonzero divisor with zero norm: d is a rational square and the
        // divisor is a plain rational in disguise.
        Rational value = *rhs.to_rational();
        a_ /= value;
        b_ /= value;
        return *this;
    }
    *this *= rhs.conjugate();
    a_ /= norm;
    b_ /= norm;
    return *this;
}

std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs)
{
    switch ((lhs - rhs).sign()) {
    case Sign::negative:
        return std::strong_ordering::less;
    case Sign::positive:
        return std::strong_ordering::greater;
    default:
        return std::strong_ordering::equal;
    }
}

std::string QuadExt::to_string() const
{
    return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + d_.to_string() + ")";
}

QuadExt quad_arith(const QuadExt& lhs, const QuadExt& rhs, QuadOp op)
{
    switch (op) {
    case QuadOp::add:
        return lhs + rhs;
    case QuadOp::sub:
        return lhs - rhs;
    case QuadOp::mul:
        return lhs * rhs;
    case QuadOp::div:
        return lhs / rhs;
    }
    throw DomainError("unknown field operation");
}

Sign quad_sign(const QuadExt& value)
{
    return value.sign();
}

std::pair<QuadExt, QuadExt> lambda_pair(const Rational& x)
{
    if (x.is_zero())
        throw DomainError("degenerate point " + x.to_string() + ": x = 0");
    if (x <= Rational(-1, 4))
        throw DomainError("degenerate point " + x.to_string() + ": x <= -1/4");
    Rational d = Rational(1) + Rational(4) * x;
    Rational half(1, 2);
    return {QuadExt(half, half, d), QuadExt(half, -half, d)};
}

} // namespace ispoly
