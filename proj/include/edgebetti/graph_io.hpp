#pragma once

#include <iosfwd>
#include <string>

#include "edgebetti/graph.hpp"
#include "json.hpp"

namespace edgebetti {

// Edge-list text: first non-comment line is n, then one "u v" pair (0-based) per line.
// '#' starts a comment. Duplicate edges are rejected.
SimpleGraph parse_edge_list(std::istream& in);
std::string to_edge_list(const SimpleGraph& g);

// {"labels": [...], "edges": [[u, v], ...]}; "labels" may be omitted when "n" is given.
SimpleGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const SimpleGraph& g);

/// Accepts either format; JSON is detected by a leading '{'.
SimpleGraph parse_graph(const std::string& text);
SimpleGraph load_graph(const std::string& path);

}  // namespace edgebetti
