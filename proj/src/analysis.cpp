#include "g24/analysis.hpp"

#include <sstream>
#include <stdexcept>

namespace g24 {

std::string to_string(const SrgParams& p)
{
    std::ostringstream os;
    os << "srg(" << p.v << "," << p.k << "," << p.lambda << "," << p.mu << ")";
    return os.str();
}

SrgResult verify_srg(const Graph& g)
{
    SrgResult r;
    const int n = g.size();
    if (n == 0) {
        r.failure = "empty-graph: no vertices";
        return r;
    }

    const int k = g.degree(0);
    for (int i = 1; i < n; ++i) {
        int d = g.degree(i);
        if (d != k) {
            std::ostringstream os;
            os << "degree-mismatch: vertex " << i << " has degree " << d
               << ", vertex 0 has " << k;
            r.failure = os.str();
            return r;
        }
    }

    int lambda = -1, mu = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int c = g.neighbors(i).and_count(g.neighbors(j));
            if (g.has_edge(i, j)) {
                if (lambda < 0)
                    lambda = c;
                else if (c != lambda) {
                    std::ostringstream os;
                    os << "lambda-mismatch: adjacent pair (" << i << "," << j << ") has "
                       << c << " common neighbors, expected " << lambda;
                    r.failure = os.str();
                    return r;
                }
            } else {
                if (mu < 0)
                    mu = c;
                else if (c != mu) {
                    std::ostringstream os;
                    os << "mu-mismatch: nonadjacent pair (" << i << "," << j << ") has "
                       << c << " common neighbors, expected " << mu;
                    r.failure = os.str();
                    return r;
                }
            }
        }
    }

    if (lambda < 0) {
        r.failure = "no-edges: lambda undefined";
        return r;
    }
    if (mu < 0) {
        r.failure = "complete-graph: mu undefined";
        return r;
    }

    // k(k - lambda - 1) = (v - k - 1) mu holds for every srg; a violation
    // here means the scan above is broken.
    if (static_cast<long long>(k) * (k - lambda - 1) !=
        static_cast<long long>(n - k - 1) * mu)
        throw std::logic_error("verify_srg: accepted parameters violate the "
                               "feasibility identity");

    r.params = SrgParams{n, k, lambda, mu};
    return r;
}

namespace {

struct CliqueCounter {
    const Graph& g;
    int s_max;
    std::vector<std::uint64_t>& counts;
    std::vector<Bitset> scratch; // candidate set per depth

    void extend(const Bitset& cand, int depth)
    {
        cand.for_each([&](int u) {
            ++counts[depth + 1];
            if (depth + 1 < s_max) {
                Bitset& next = scratch[depth + 1];
                next.assign_and(cand, g.neighbors(u));
                next.clear_through(u);
                if (next.any())
                    extend(next, depth + 1);
            }
        });
    }
};

} // namespace

CliqueProfile count_cliques(const Graph& g, int s_max)
{
    if (s_max < 2)
        throw std::invalid_argument("count_cliques: s_max must be at least 2");
    CliqueProfile p;
    p.s_max = s_max;
    p.counts.assign(s_max + 1, 0);

    const int n = g.size();
    CliqueCounter cc{g, s_max, p.counts, std::vector<Bitset>(s_max + 1)};
    Bitset cand(n);
    for (int v = 0; v < n; ++v) {
        cand = g.neighbors(v);
        cand.clear_through(v);
        if (cand.any())
            cc.extend(cand, 1);
    }
    return p;
}

std::string render_profile(const CliqueProfile& p)
{
    std::ostringstream os;
    for (int s = 2; s <= p.s_max; ++s)
        os << " " << s << ":" << p.counts[s];
    return os.str();
}

} // namespace g24
