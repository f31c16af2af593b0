#pragma once

#include <iosfwd>
#include <string>

#include "lgp/graph.hpp"

namespace lgp {

/// Edge-list text format: first non-comment line "n m", then m lines "u v"
/// with 0-based vertex ids. '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_string(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6, per the public format specification (n <= 62 supported here):
/// byte n+63, then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
/// packed big-endian into 6-bit groups, each + 63.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

/// One graph6 value per line; '>>graph6<<' headers and blank lines skipped.
std::vector<Graph> read_graph6(std::istream& in);

/// Reads a file, deciding the format by extension: ".g6" is graph6
/// (first graph of the file), anything else the edge-list format.
Graph read_graph_file(const std::string& path);

} // namespace lgp
