#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ispoly {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Serialized as "p/q"; "p" is accepted on input.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>)
            value_ = static_cast<long>(value);
        else
            value_ = static_cast<unsigned long>(value);
    }

    Rational(const Integer& value) : value_(value) {} // NOLINT
    Rational(const Integer& numerator, const Integer& denominator);

    static Rational parse(std::string_view text);
    std::string to_string() const;

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational pow(long exponent) const;
    /// Rational square root if this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;
    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Parses a decimal integer, optionally signed. Throws ParseError.
Integer parse_integer(std::string_view text);

} // namespace ispoly
