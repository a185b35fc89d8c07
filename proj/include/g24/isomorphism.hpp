#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g24/graph.hpp"

namespace g24 {

// vertex -> class id; ids are contiguous 0..c-1 and every vertex is colored
using Coloring = std::vector<int>;

Coloring uniform_coloring(int n);

// Coarsest stable refinement: vertices keep a common color only if they
// started with equal colors and have equal multisets of neighbor colors.
// Deterministic (classes ordered by old color, then signature) and
// idempotent on its own output.
Coloring refine(const Graph& g, const Coloring& initial);

struct IsoWitness {
    std::vector<int> perm; // vertex of g1 -> vertex of g2
};

// Exhaustive edge-preservation check of a candidate bijection.
bool verify_witness(const Graph& g1, const Graph& g2, const std::vector<int>& perm);

struct IsoResult {
    std::optional<IsoWitness> witness;
    std::string reason;       // set when no witness was found
    std::uint64_t nodes = 0;  // search tree size, for diagnostics
    bool found() const { return witness.has_value(); }
};

// Backtracking individualization-refinement search. Seed colorings must
// have matching class-size vectors; they prune the search and any witness
// returned respects them. Every witness is re-verified exhaustively before
// being reported. NotFound means the seeded search space is exhausted.
IsoResult find_isomorphism(const Graph& g1, const Graph& g2, const Coloring& seed1,
                           const Coloring& seed2);

// "0 -> 17\n1 -> 203\n..." for external re-checking
std::string render_witness(const IsoWitness& w);

} // namespace g24
