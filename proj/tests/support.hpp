#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "g24/construction.hpp"
#include "g24/graph.hpp"

namespace testsupport {

// The full pipeline, built once per test binary.
const g24::Construction& built();

// Independent clique-count oracle: scan all vertex subsets of size <= s_max.
// Only sane for n <= ~20.
std::vector<std::uint64_t> naive_clique_counts(const g24::Graph& g, int s_max);

// Erdos-Renyi-style graph with edge probability 1/2.
g24::Graph random_graph(std::mt19937& rng, int n);

g24::Graph cycle(int n);
g24::Graph path(int n);
g24::Graph complete(int n);

// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
// {0..4}, adjacent iff disjoint.
g24::Graph petersen();

} // namespace testsupport
