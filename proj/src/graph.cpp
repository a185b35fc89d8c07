#include "g24/graph.hpp"

#include <stdexcept>

namespace g24 {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges, std::string label)
{
    if (n < 0)
        throw std::invalid_argument("Graph::build: negative vertex count");
    Graph g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.adj_.assign(n, Bitset(n));
    for (const auto& [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("Graph::build: edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") out of range for n=" +
                                        std::to_string(n));
        if (i == j)
            throw std::invalid_argument("Graph::build: self-loop at vertex " +
                                        std::to_string(i));
        g.adj_[i].set(j);
        g.adj_[j].set(i);
    }
    return g;
}

std::uint64_t Graph::edge_count() const
{
    std::uint64_t deg_sum = 0;
    for (const auto& row : adj_)
        deg_sum += row.count();
    return deg_sum / 2;
}

int Graph::common_neighbors(int i, int j) const
{
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::invalid_argument("common_neighbors: vertex out of range");
    if (i == j)
        throw std::invalid_argument("common_neighbors: vertices must differ");
    return adj_[i].and_count(adj_[j]);
}

Graph Graph::induced_subgraph(const std::vector<int>& keep, std::string label) const
{
    std::vector<bool> seen(n_, false);
    for (int v : keep) {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
        if (seen[v])
            throw std::invalid_argument("induced_subgraph: duplicate vertex " +
                                        std::to_string(v));
        seen[v] = true;
    }
    const int m = static_cast<int>(keep.size());
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            if (has_edge(keep[p], keep[q]))
                edges.emplace_back(p, q);
    return build(m, edges, std::move(label));
}

} // namespace g24
