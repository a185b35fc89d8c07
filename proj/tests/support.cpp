#include "support.hpp"

namespace testsupport {

const g24::Construction& built()
{
    static const g24::Construction c = g24::build_all();
    return c;
}

std::vector<std::uint64_t> naive_clique_counts(const g24::Graph& g, int s_max)
{
    const int n = g.size();
    std::vector<std::uint64_t> counts(s_max + 1, 0);
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (subset >> v & 1u)
                vs.push_back(v);
        int s = static_cast<int>(vs.size());
        if (s < 2 || s > s_max)
            continue;
        bool clique = true;
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!g.has_edge(vs[a], vs[b])) {
                    clique = false;
                    break;
                }
        if (clique)
            ++counts[s];
    }
    return counts;
}

g24::Graph random_graph(std::mt19937& rng, int n)
{
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.emplace_back(i, j);
    return g24::Graph::build(n, edges);
}

g24::Graph cycle(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return g24::Graph::build(n, edges);
}

g24::Graph path(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return g24::Graph::build(n, edges);
}

g24::Graph complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return g24::Graph::build(n, edges);
}

g24::Graph petersen()
{
    std::vector<std::pair<int, int>> pairs; // the ten 2-subsets of {0..4}
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            pairs.emplace_back(a, b);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a1, b1] = pairs[i];
            auto [a2, b2] = pairs[j];
            if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2)
                edges.emplace_back(i, j);
        }
    return g24::Graph::build(10, edges);
}

} // namespace testsupport
