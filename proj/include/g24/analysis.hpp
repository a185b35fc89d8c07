#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g24/graph.hpp"

namespace g24 {

struct SrgParams {
    int v = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;
    bool operator==(const SrgParams&) const = default;
};

std::string to_string(const SrgParams& p); // "srg(v,k,lambda,mu)"

// Outcome of the universal pairwise scan. On failure, `failure` names the
// first violating vertex or pair, prefixed with a stable reason code
// (degree-mismatch, lambda-mismatch, mu-mismatch, no-edges, complete-graph,
// empty-graph).
struct SrgResult {
    std::optional<SrgParams> params;
    std::string failure;
    bool ok() const { return params.has_value(); }
};

SrgResult verify_srg(const Graph& g);

// Exact number of s-cliques for every s in [2, s_max].
struct CliqueProfile {
    int s_max = 0;
    std::vector<std::uint64_t> counts; // indexed by clique size, [0] and [1] unused

    std::uint64_t count(int s) const { return counts.at(s); }
};

// Counts complete subgraphs by recursive candidate-set intersection over
// ascending vertex order, so each clique is seen exactly once.
CliqueProfile count_cliques(const Graph& g, int s_max);

// " 2:20800 3:249600 ..." (leading space before every entry)
std::string render_profile(const CliqueProfile& p);

} // namespace g24
