#pragma once

#include <string>

#include "epsub/graph.hpp"

namespace epsub {

/// Interchange format used by every CLI command:
///   {"n": <int>, "edges": [[u,v], ...]}
/// Vertices are implicitly 0..n-1.
std::string graph_to_json(const Graph& g);

/// Parses the interchange format. Any structural problem (missing keys, bad
/// types, loops, out-of-range endpoints) raises MalformedInputError.
Graph graph_from_json(const std::string& text);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace epsub
