#pragma once

#include "ispoly/rational.hpp"

#include <utility>

namespace ispoly {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Element a + b*sqrt(d) of Q(sqrt(d)) with a nonnegative rational
/// discriminant d. All operands of a binary operation must share d.
///
/// Values are never collapsed to rationals, even when d is a rational square;
/// equality and ordering are decided on the real value, so 4 + 0*sqrt(9) and
/// 1 + 1*sqrt(9) compare equal.
class QuadExt {
public:
    QuadExt(Rational a, Rational b, Rational d);
    /// The rational `a` embedded in Q(sqrt(d)).
    static QuadExt rational(Rational a, Rational d) { return QuadExt(std::move(a), Rational(0), std::move(d)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }

    Sign sign() const;
    bool is_zero() const { return sign() == Sign::zero; }
    QuadExt abs() const;
    QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
    QuadExt pow(unsigned long exponent) const;
    /// The rational value, if b = 0 or d is a rational square.
    std::optional<Rational> to_rational() const;
    double to_double() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadExt& lhs, const QuadExt& rhs) { return (lhs - rhs).is_zero(); }
    friend std::strong_ordering operator<=>(const QuadExt& lhs, const QuadExt& rhs);

    std::string to_string() const;

private:
    void require_same_field(const QuadExt& rhs) const;

    Rational a_;
    Rational b_;
    Rational d_;
};

enum class QuadOp { add, sub, mul, div };

QuadExt quad_arith(const QuadExt& lhs, const QuadExt& rhs, QuadOp op);
Sign quad_sign(const QuadExt& value);

/// Roots lambda1 > lambda2 of t^2 - t - x, as elements of Q(sqrt(1 + 4x)).
/// Requires x > -1/4 and x != 0.
std::pair<QuadExt, QuadExt> lambda_pair(const Rational& x);

} // namespace ispoly
