#pragma once

#include "ispoly/cnf.hpp"
#include "ispoly/graph.hpp"

#include <cstdint>
#include <random>

namespace ispoly {

/// Seeded generator with platform-independent bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& items)
    {
        return items[below(items.size())];
    }

private:
    std::mt19937_64 engine_;
};

/// G(n, 1/2).
Graph random_graph(Rng& rng, std::size_t n);

/// 3-CNF over n variables with m clauses of width 1..3. Clauses may repeat
/// a variable, including as a complementary pair.
CnfFormula random_3cnf(Rng& rng, std::size_t n, std::size_t m);

/// Valid X3SAT instance over n >= 3 variables: widths 2 or 3 on distinct
/// variables, total width at most max_total_width.
CnfFormula random_x3sat(Rng& rng, std::size_t n, std::size_t max_total_width);

/// Multiset of 1..max_size entries drawn from 0..max_entry.
CloneSpec random_clone_spec(Rng& rng, std::size_t max_size, std::size_t max_entry);

} // namespace ispoly
