#pragma once

#include "ispoly/graph.hpp"
#include "ispoly/isp_eval.hpp"
#include "ispoly/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace ispoly {

enum class OracleKind { internal_definitional, external_command };

/// Source of exact values I(graph; point).
class Oracle {
public:
    virtual ~Oracle() = default;

    /// index identifies the query within a batch (the clone index during
    /// interpolation); it is echoed on the wire.
    virtual Rational evaluate(const Graph& g, const Rational& point, std::size_t index) = 0;
    virtual OracleKind kind() const = 0;

    /// Largest graph the oracle should be asked about, if known.
    std::optional<std::size_t> max_vertices;
};

/// The branching evaluator of isp_eval. Never uses clone or path identities.
class DefinitionalOracle final : public Oracle {
public:
    explicit DefinitionalOracle(EvalLimits limits = {}) : limits_(limits) {}

    Rational evaluate(const Graph& g, const Rational& point, std::size_t index) override;
    OracleKind kind() const override { return OracleKind::internal_definitional; }

private:
    EvalLimits limits_;
};

/// Runs `/bin/sh -c command` once per query. The child receives one request
/// line on stdin and must print one response line on stdout.
class ExternalOracle final : public Oracle {
public:
    explicit ExternalOracle(std::string command) : command_(std::move(command)) {}

    Rational evaluate(const Graph& g, const Rational& point, std::size_t index) override;
    OracleKind kind() const override { return OracleKind::external_command; }
    const std::string& command() const { return command_; }

private:
    std::string command_;
};

std::unique_ptr<Oracle> external_oracle(std::string command_template);

// Wire protocol: one JSON object per line.
//   request  {"index": i, "graph": {"n": .., "edges": [[u, v], ..]}, "point": "p/q"}
//   response {"index": i, "value": "p/q"}
//         or {"index": i, "error": "message", "category": "capacity" | "domain"}

struct OracleRequest {
    std::size_t index = 0;
    Graph graph;
    Rational point;
};

std::string format_oracle_request(const Graph& g, const Rational& point, std::size_t index);
OracleRequest parse_oracle_request(std::string_view line);
std::string format_oracle_response(const Rational& value, std::size_t index);

/// Decodes a response line. Error records become CapacityError or
/// DomainError; anything else that is not a conforming value record raises
/// ProtocolError quoting the line.
Rational parse_oracle_response(std::string_view line, std::optional<std::size_t> expected_index = std::nullopt);

/// Answers request lines from `in` on `out` with the definitional evaluator
/// until end of input. A request that fails gets an error record carrying
/// its category instead of a value. Returns the number of requests served.
std::size_t serve_oracle(std::istream& in, std::ostream& out, const EvalLimits& limits = {});

} // namespace ispoly
