#pragma once

#include "ispoly/graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ispoly {

using Json = nlohmann::ordered_json;

/// Text format: comment lines "c ...", header "p is n m", then m lines
/// "e u v" with 1-based ids. Optional "l v lit" lines attach a DIMACS
/// literal label to vertex v.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

/// Structured format {"n": int, "edges": [[u, v], ...]} with 0-based ids,
/// plus an optional "labels" array of DIMACS literals (0 = unlabeled).
Graph graph_from_json(const Json& doc);
Json graph_to_json(const Graph& g);

/// Dispatches on the first non-blank character: '{' selects the structured
/// format, anything else the text format.
Graph parse_graph(std::string_view text);

} // namespace ispoly
