#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

// graph6: printable encoding of undirected graphs. The order is N(n) (one byte
// n+63 for n <= 62, '~' + 3 bytes for n <= 258047, '~~' + 6 bytes beyond);
// then the upper triangle in column-major order (pairs (0,1),(0,2),(1,2),
// (0,3),...) packed 6 bits per byte, most significant bit first, offset 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// One graph per line; blank lines and an optional ">>graph6<<" header are
// skipped. Parse failures name the line number.
std::vector<Graph> read_graph6_file(const std::string& path);

// DIMACS edge format: "p edge n m" header, then "e u v" lines with 1-based
// endpoints; "c" comment lines allowed.
Graph read_dimacs(std::istream& in);

// Plain edge list: first line "n m", then m lines "u v" with 0-based endpoints.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// Dispatch on extension: .g6 -> graph6 (first line), .dimacs/.col -> DIMACS,
// anything else -> plain edge list.
Graph read_graph_file(const std::string& path);

} // namespace limpack
