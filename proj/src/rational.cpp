#include "ispoly/rational.hpp"

#include "ispoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace ispoly {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Integer parse_integer(std::string_view text)
{
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (!all_digits(digits))
        throw ParseError(0, "not an integer: '" + std::string(text) + "'");
    return Integer(std::string(text), 10);
}

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0)
        throw DomainError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den))
        throw ParseError(0, "not a rational: '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    Integer n;
    try {
        n = parse_integer(num);
    } catch (const ParseError&) {
        throw ParseError(0, "not a rational: '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const
{
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        if (is_zero())
            throw DomainError("zero raised to a negative power");
        return Rational(1) / pow(-exponent);
    }
    Rational r;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    r.value_ = mpq_class(num, den); // already coprime
    return r;
}

std::optional<Rational> Rational::exact_sqrt() const
{
    if (sign() < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(value_.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(value_.get_den_mpz_t()) == 0)
        return std::nullopt;
    Integer num = sqrt(value_.get_num());
    Integer den = sqrt(value_.get_den());
    return Rational(num, den);
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value)
{
    return os << value.to_string();
}

} // namespace ispoly
