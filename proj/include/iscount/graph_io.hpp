#pragma once

#include <iosfwd>
#include <string>

#include "iscount/graph.hpp"

namespace iscount {

// Text format: comment lines start with `c`; the first non-comment line is
// `p is <n> <m>`; then exactly m lines `e <u> <v>` with 1 <= u < v <= n.
// Duplicate edges are rejected. Errors carry 1-based line numbers.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

// Inverse of parse_graph for graphs whose ids are exactly 1..n.
std::string serialize_graph(const Graph& g);

}  // namespace iscount
