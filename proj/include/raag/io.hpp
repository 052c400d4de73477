#pragma once

#include <string>

#include <json.hpp>

#include "raag/graph.hpp"
#include "raag/series.hpp"

namespace raag {

inline constexpr const char* kToolVersion = "0.1.0";

// Graph files: {"vertices": ["v1", ...], "edges": [["v1","v2"], ...]} or a
// DOT subset (undirected, no attributes). Parse errors carry line:column.
Graph::Ptr parse_graph_json(const std::string& text);
Graph::Ptr parse_graph_dot(const std::string& text);
// Dispatches on extension: .dot/.gv use the DOT reader, everything else JSON.
Graph::Ptr load_graph_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);

// "v1.v3" in canonical order; the unit monomial is "1".
std::string monomial_to_string(const Graph& g, const Monomial& m);

// {"cap": c, "mod": p, "terms": [{"coeff": n, "monomial": "v1.v3"}, ...]}
nlohmann::json series_to_json(const Series& s);
Series parse_series_json(const Graph::Ptr& g, const nlohmann::json& j);

// {"edge_hash": "<16 hex digits>", "vertices": n}; FNV-1a over the sorted
// labelled edge list, so isomorphic-but-relabelled graphs hash apart.
nlohmann::json graph_fingerprint(const Graph& g);

nlohmann::json make_report(const std::string& command, const Graph& g, nlohmann::json payload);
nlohmann::json make_report(const std::string& command, nlohmann::json payload);

nlohmann::json error_json(const Error& e);

// Compact single-line JSON by default; two-space indent when pretty.
std::string render_json(const nlohmann::json& j, bool pretty);

}  // namespace raag
