#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ispoly {

/// A variable (1-based) or its negation.
struct Literal {
    std::uint32_t variable = 1;
    bool negated = false;

    /// From a signed DIMACS literal; 0 is rejected.
    static Literal from_dimacs(long value);
    long to_dimacs() const { return negated ? -static_cast<long>(variable) : static_cast<long>(variable); }

    Literal operator~() const { return Literal{variable, !negated}; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

std::string to_string(const Literal& literal);

} // namespace ispoly
