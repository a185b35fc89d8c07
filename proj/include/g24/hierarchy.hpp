#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "g24/graph.hpp"

namespace g24 {

// Coordinates of a vertex of E in the four-level hierarchy:
// r = cell set, s = cell within the set, t = part within the cell,
// u = vertex within the part.
struct Coord {
    int r = 0, s = 0, t = 0, u = 0;
    bool operator==(const Coord&) const = default;
};

// The bijection (r,s,t,u) -> vertex of E, r in [0,5), s,t,u in [0,4),
// together with the W-set of every cell. Indices are canonical: cell sets,
// cells and parts are ordered by their smallest member vertex, vertices
// within a part ascend.
struct MIndex {
    static constexpr int num_sets = 5;
    static constexpr int num_vertices = 320;

    std::array<int, num_vertices> to_vertex{};   // flat(r,s,t,u) -> vertex
    std::array<Coord, num_vertices> from_vertex{};
    std::array<std::uint16_t, 20> cell_wset{};   // (r*4+s) -> mask over X

    static constexpr int flat(int r, int s, int t, int u)
    {
        return ((r * 4 + s) * 4 + t) * 4 + u;
    }
    int vertex(int r, int s, int t, int u) const { return to_vertex[flat(r, s, t, u)]; }
    const Coord& coord(int v) const { return from_vertex[v]; }
    std::uint16_t wset(int r, int s) const { return cell_wset[r * 4 + s]; }
};

// Group the vertices of E into cells (equal W-sets), cell sets (disjoint
// W-sets) and cell parts (complement components inside a cell), then assign
// canonical indices. Throws std::runtime_error when the expected structure
// (20 cells of 16, 5 sets of 4 partitioning X, four 4-cocliques per cell
// with all cross-part edges present) does not materialize.
MIndex build_M(const Graph& e, const std::vector<std::uint16_t>& w_mask);

struct CheckLine {
    bool pass = false;
    std::string label;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_passed() const;
    std::string render() const; // "PASS <label>: <detail>" per line
};

// Exhaustive verification of the hierarchy propositions over their full
// index ranges:
//   w-set-size                  every vertex has |W| = 4
//   w-intersection-trichotomy   |W∩W| is 4 / 0 / 1 by (r,s) pattern
//   part-coclique               no edge inside a cell part
//   cross-part-complete         all edges across parts of one cell
//   cell-set-separation         no edge between cells of one set
//   foreign-part-matching       exactly one neighbor in each foreign part
//   third-set-common-neighbors  counts into a third cell set are 0 / 1
CheckReport verify_hierarchy(const Graph& e, const MIndex& m,
                             const std::vector<std::uint16_t>& w_mask);

struct CocliqueReport {
    std::array<int, MIndex::num_sets> cocliques_per_set{}; // verified, want 256
    std::array<int, MIndex::num_sets> divisions_per_set{}; // verified, want 13824
    int total_cocliques = 0;                               // want 1280
    bool parts_ok = false; // every cell part is a 4-coclique
    bool all_ok() const;
    std::string render() const;
};

// Enumerate, for each cell set, the 4^4 part selections (16-cocliques) and
// the 24^3 part-permutation combinations (divisions into four 16-cocliques),
// verifying independence respectively partition for every single one.
CocliqueReport coclique_census(const Graph& e, const MIndex& m);

} // namespace g24
