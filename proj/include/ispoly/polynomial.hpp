#pragma once

#include "ispoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ispoly {

/// Dense univariate polynomial over Q, lowest degree first. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
    /// X - root
    static Polynomial linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of X^k, zero beyond the degree.
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Horner evaluation.
    Rational evaluate(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::string to_string(const Polynomial& p);

} // namespace ispoly
