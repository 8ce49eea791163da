#pragma once

#include "ocd/graph.hpp"

#include <iosfwd>
#include <string>

namespace ocd {

// Edge-list text format:
//
//   g <n> <m>
//   <u> <v>        (m lines, 0 <= u < v < n)
//
// Lines starting with '#' are comments. Duplicate edges and self-loops are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace ocd
