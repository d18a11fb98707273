#pragma once

#include "ispoly/graph_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ispoly {

/// Re-runnable input of a failed case: a DIMACS formula or a graph file,
/// plus the parameters (points, clone specs, ...) that made it fail.
struct Counterexample {
    std::string check;
    std::string format; // "dimacs-cnf" or "graph"
    std::string contents;
    Json parameters;
};

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// One line per check, e.g. "gadget corners: 8/8".
    std::vector<std::string> summary;
    /// First failure, with cases visited in increasing size.
    std::optional<Counterexample> counterexample;

    bool passed() const { return failures == 0; }
};

constexpr std::uint64_t default_verify_seed = 7;

/// gadget, reduction, clone-identity, path-identity, comb-identity,
/// pipeline, normalizer.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown name.
std::vector<SuiteResult> run_suites(std::string_view name, std::uint64_t seed = default_verify_seed);

Json to_json(const SuiteResult& result);

} // namespace ispoly
