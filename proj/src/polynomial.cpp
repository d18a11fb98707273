#include "ispoly/polynomial.hpp"

#include <sstream>

namespace ispoly {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Rational& c = p.coefficients()[k];
        if (c.is_zero())
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << (c.is_integer() ? c.numerator().get_str() : "(" + c.to_string() + ")");
        if (k == 1)
            out << "*X";
        else if (k > 1)
            out << "*X^" << k;
    }
    return out.str();
}

} // namespace ispoly
