#include "g24/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace g24 {

namespace {

int num_classes(const Coloring& c)
{
    int m = -1;
    for (int x : c)
        m = std::max(m, x);
    return m + 1;
}

void validate_coloring(int n, const Coloring& c)
{
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("coloring size does not match vertex count");
    int k = num_classes(c);
    std::vector<int> seen(k, 0);
    for (int x : c) {
        if (x < 0 || x >= k)
            throw std::invalid_argument("coloring has out-of-range class id");
        ++seen[x];
    }
    for (int cnt : seen)
        if (cnt == 0)
            throw std::invalid_argument("coloring class ids are not contiguous");
}

using Sig = std::pair<int, std::vector<int>>; // (old color, sorted neighbor colors)

Sig signature_of(const Graph& g, const Coloring& c, int v)
{
    std::vector<int> nb;
    nb.reserve(g.degree(v));
    g.neighbors(v).for_each([&](int u) { nb.push_back(c[u]); });
    std::sort(nb.begin(), nb.end());
    return {c[v], std::move(nb)};
}

} // namespace

Coloring uniform_coloring(int n)
{
    return Coloring(n, 0);
}

Coloring refine(const Graph& g, const Coloring& initial)
{
    const int n = g.size();
    validate_coloring(n, initial);

    Coloring c = initial;
    int classes = num_classes(c);
    for (;;) {
        std::vector<Sig> sigs(n);
        std::map<Sig, int> ids;
        for (int v = 0; v < n; ++v) {
            sigs[v] = signature_of(g, c, v);
            ids.emplace(sigs[v], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        if (next == classes)
            return c; // stable: ids sorted by old color keep the numbering
        for (int v = 0; v < n; ++v)
            c[v] = ids[sigs[v]];
        classes = next;
    }
}

bool verify_witness(const Graph& g1, const Graph& g2, const std::vector<int>& perm)
{
    const int n = g1.size();
    if (g2.size() != n || static_cast<int>(perm.size()) != n)
        return false;
    std::vector<bool> hit(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[p])
            return false;
        hit[p] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g1.has_edge(i, j) != g2.has_edge(perm[i], perm[j]))
                return false;
    return true;
}

namespace {

struct Searcher {
    const Graph& g1;
    const Graph& g2;
    std::uint64_t nodes = 0;

    // Joint refinement with a shared signature table so class ids stay
    // aligned across the two graphs. False when class sizes diverge.
    bool refine_pair(Coloring& c1, Coloring& c2)
    {
        const int n = g1.size();
        int classes = num_classes(c1);
        for (;;) {
            std::vector<Sig> s1(n), s2(n);
            std::map<Sig, int> ids;
            for (int v = 0; v < n; ++v) {
                s1[v] = signature_of(g1, c1, v);
                s2[v] = signature_of(g2, c2, v);
                ids.emplace(s1[v], 0);
                ids.emplace(s2[v], 0);
            }
            int next = 0;
            for (auto& [sig, id] : ids)
                id = next++;
            std::vector<int> cnt1(next, 0), cnt2(next, 0);
            for (int v = 0; v < n; ++v) {
                ++cnt1[ids[s1[v]]];
                ++cnt2[ids[s2[v]]];
            }
            if (cnt1 != cnt2)
                return false;
            if (next == classes)
                return true;
            for (int v = 0; v < n; ++v) {
                c1[v] = ids[s1[v]];
                c2[v] = ids[s2[v]];
            }
            classes = next;
        }
    }

    std::optional<std::vector<int>> search(Coloring c1, Coloring c2)
    {
        ++nodes;
        if (!refine_pair(c1, c2))
            return std::nullopt;

        const int n = g1.size();
        const int classes = num_classes(c1);
        std::vector<int> size(classes, 0);
        for (int v = 0; v < n; ++v)
            ++size[c1[v]];

        // branch on the largest ambiguous class, lowest id on ties
        int target = -1;
        for (int col = 0; col < classes; ++col)
            if (size[col] >= 2 && (target < 0 || size[col] > size[target]))
                target = col;

        if (target < 0) {
            // discrete: colors pair the vertices off
            std::vector<int> pos(classes, -1), perm(n, -1);
            for (int v = 0; v < n; ++v)
                pos[c2[v]] = v;
            for (int v = 0; v < n; ++v)
                perm[v] = pos[c1[v]];
            if (verify_witness(g1, g2, perm))
                return perm;
            return std::nullopt;
        }

        int v = 0;
        while (c1[v] != target)
            ++v;
        const int fresh = classes;
        for (int w = 0; w < n; ++w) {
            if (c2[w] != target)
                continue;
            Coloring b1 = c1, b2 = c2;
            b1[v] = fresh;
            b2[w] = fresh;
            if (auto perm = search(std::move(b1), std::move(b2)))
                return perm;
        }
        return std::nullopt;
    }
};

} // namespace

IsoResult find_isomorphism(const Graph& g1, const Graph& g2, const Coloring& seed1,
                           const Coloring& seed2)
{
    IsoResult res;
    if (g1.size() != g2.size()) {
        res.reason = "vertex counts differ (" + std::to_string(g1.size()) + " vs " +
                     std::to_string(g2.size()) + ")";
        return res;
    }
    validate_coloring(g1.size(), seed1);
    validate_coloring(g2.size(), seed2);

    const int k1 = num_classes(seed1), k2 = num_classes(seed2);
    if (k1 != k2) {
        res.reason = "seed colorings have different class counts";
        return res;
    }
    std::vector<int> cnt1(k1, 0), cnt2(k1, 0);
    for (int x : seed1)
        ++cnt1[x];
    for (int x : seed2)
        ++cnt2[x];
    if (cnt1 != cnt2) {
        res.reason = "seed colorings have different class sizes";
        return res;
    }
    if (g1.edge_count() != g2.edge_count()) {
        res.reason = "edge counts differ (" + std::to_string(g1.edge_count()) + " vs " +
                     std::to_string(g2.edge_count()) + ")";
        return res;
    }

    Searcher s{g1, g2};
    auto perm = s.search(seed1, seed2);
    res.nodes = s.nodes;
    if (perm)
        res.witness = IsoWitness{std::move(*perm)};
    else
        res.reason = "search space exhausted";
    return res;
}

std::string render_witness(const IsoWitness& w)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w.perm.size(); ++i)
        os << i << " -> " << w.perm[i] << "\n";
    return os.str();
}

} // namespace g24
