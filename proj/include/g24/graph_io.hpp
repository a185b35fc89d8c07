#pragma once

#include <string>

#include "g24/graph.hpp"

namespace g24 {

// graph6: size header (63+n, or 126 plus three 6-bit bytes for n > 62),
// then the upper-triangle bits in column-major pair order (0,1),(0,2),
// (1,2),(0,3),..., packed big-endian 6 per byte, each byte offset by 63.
std::string write_graph6(const Graph& g);

// Dreadnaut input: "n=<N> $=0 g", one adjacency line per vertex listing
// the neighbors above it (the symmetric side is implied), ';' separators
// with '.' closing the last line, then the run command "x".
std::string write_dreadnaut(const Graph& g);

// DIMACS: "p edge <n> <m>" then one "e <i> <j>" line per edge, endpoints
// 1-based with i < j, ascending.
std::string write_dimacs(const Graph& g);

} // namespace g24
