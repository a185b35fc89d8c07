#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "g24/bitset.hpp"

namespace g24 {

// Immutable simple graph on vertices 0..n-1, one n-bit neighborhood row per
// vertex. Rows stay symmetric and loop-free by construction.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& edges,
                       std::string label = "");

    int size() const { return n_; }
    const std::string& label() const { return label_; }

    bool has_edge(int i, int j) const { return adj_[i].test(j); }
    const Bitset& neighbors(int i) const { return adj_[i]; }
    int degree(int i) const { return adj_[i].count(); }

    std::uint64_t edge_count() const;

    // |N(i) ∩ N(j)|; i and j must be distinct in-range vertices
    int common_neighbors(int i, int j) const;

    // Graph on |keep| vertices, position p adjacent to q iff keep[p] ~ keep[q]
    Graph induced_subgraph(const std::vector<int>& keep, std::string label = "") const;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::string label_;
};

} // namespace g24
