#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "g24/graph.hpp"
#include "g24/hermitian.hpp"
#include "g24/hierarchy.hpp"

namespace g24 {

// A vertex of G: an orthogonal basis of three nonisotropic points together
// with the 15 isotropic points lying on its three polar lines.
struct Triangle {
    std::array<int, 3> basis; // nonisotropic ranks, ascending
    Bitset iso_set;           // 65-bit mask of iso ranks, exactly 15 set
};

// All 416 unordered pairwise-orthogonal triples in sorted-triple
// lexicographic order. Throws if a triple's polar iso-sets overlap.
std::vector<Triangle> enumerate_bases(const PointTables& tables);

// 416-vertex graph, adjacent iff the iso-sets share exactly 3 elements.
Graph build_G(const std::vector<Triangle>& triangles);

// B = vertices whose iso-set contains the first isotropic point (rank 0),
// C = the rest; both ascending.
std::pair<std::vector<int>, std::vector<int>> split_B_C(const std::vector<Triangle>& triangles);

struct XW {
    std::vector<int> x;               // the 16 nonisotropic ranks whose polar
                                      // contains iso rank 0, ascending
    std::vector<std::uint16_t> w;     // per E-position: mask over positions of x
};

// W(i) = the elements of X that appear in no basis of any G-neighbor of i
// inside B. Positions follow C's ascending order (= E's vertex order).
XW compute_X_W(const PointTables& tables, const std::vector<Triangle>& triangles,
               const Graph& g, const std::vector<int>& b_vertices,
               const std::vector<int>& c_vertices);

// 336-vertex supergraph: vertices 0..319 carry E unchanged, vertices
// 320+p are the attachment vertices d(x[p]); i ~ d(x) iff x ∈ W(i), and
// the attachment vertices form a coclique.
Graph build_H(const Graph& e, const XW& xw);

// 256-vertex induced subgraph of E on the four cell sets != excluded_r,
// vertices in (r,s,t,u) lexicographic order.
Graph build_F(const Graph& e, const MIndex& m, int excluded_r);

// The whole pipeline, built in dependency order.
struct Construction {
    PointTables tables;
    std::vector<Triangle> triangles;
    Graph g;                        // 416 vertices
    std::vector<int> b_vertices;    // 96
    std::vector<int> c_vertices;    // 320
    Graph e;                        // 320 vertices, induced on C
    XW xw;
    MIndex m;
    Graph h;                        // 336 vertices
    std::array<Graph, 5> f;         // f[r] excludes cell set r
};

Construction build_all();

} // namespace g24
