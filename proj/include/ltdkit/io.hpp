#pragma once

#include <iosfwd>
#include <string>

#include "ltdkit/graph.hpp"

namespace ltdkit {

// Edge list: first non-comment line "n m", then m lines "u v", 0-indexed.
// '#' starts a comment anywhere on a line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6: standard ASCII encoding, n <= 62 (single-byte order only).
// Accepts an optional ">>graph6<<" header prefix.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Format sniffing: a line starting with a digit (after comments) is an edge
// list, anything else graph6.
Graph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Graph& g, const std::string& format);

}  // namespace ltdkit
