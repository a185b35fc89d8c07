#include "g24/hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace g24 {

namespace {

std::runtime_error structure_error(const std::string& what)
{
    return std::runtime_error("build_M: " + what);
}

// connected components of an arbitrary symmetric relation on [0,n)
std::vector<std::vector<int>> components(int n, const std::vector<std::vector<bool>>& rel)
{
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w = 0; w < n; ++w)
                if (comp[w] < 0 && rel[v][w]) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

} // namespace

MIndex build_M(const Graph& e, const std::vector<std::uint16_t>& w_mask)
{
    const int n = e.size();
    if (n != MIndex::num_vertices || w_mask.size() != static_cast<std::size_t>(n))
        throw structure_error("expected 320 vertices with one W-mask each");

    // cells = classes of equal W-sets
    std::map<std::uint16_t, std::vector<int>> classes;
    for (int v = 0; v < n; ++v)
        classes[w_mask[v]].push_back(v);
    if (classes.size() != 20)
        throw structure_error("expected 20 distinct W-sets, found " +
                              std::to_string(classes.size()));

    struct Cell {
        std::uint16_t mask;
        std::vector<int> members;
    };
    std::vector<Cell> cells;
    for (auto& [mask, members] : classes) {
        if (std::popcount(mask) != 4)
            throw structure_error("W-set with " + std::to_string(std::popcount(mask)) +
                                  " elements, want 4");
        if (members.size() != 16)
            throw structure_error("cell with " + std::to_string(members.size()) +
                                  " vertices, want 16");
        cells.push_back(Cell{mask, members});
    }

    // cell sets = components of the pairwise-disjointness relation
    std::vector<std::vector<bool>> disjoint(20, std::vector<bool>(20, false));
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b)
            disjoint[a][b] = a != b && (cells[a].mask & cells[b].mask) == 0;
    auto sets = components(20, disjoint);
    if (sets.size() != 5)
        throw structure_error("expected 5 cell sets, found " + std::to_string(sets.size()));
    for (auto& set : sets) {
        if (set.size() != 4)
            throw structure_error("cell set with " + std::to_string(set.size()) +
                                  " cells, want 4");
        std::uint16_t uni = 0;
        for (int c : set)
            uni |= cells[c].mask;
        if (uni != 0xFFFF)
            throw structure_error("W-sets of a cell set do not partition X");
        for (int a : set)
            for (int b : set)
                if (a != b && (cells[a].mask & cells[b].mask) != 0)
                    throw structure_error("cell set contains overlapping W-sets");
    }

    auto min_vertex_of_cell = [&](int c) { return cells[c].members.front(); };
    auto min_vertex_of_set = [&](const std::vector<int>& set) {
        int mv = MIndex::num_vertices;
        for (int c : set)
            mv = std::min(mv, min_vertex_of_cell(c));
        return mv;
    };
    std::sort(sets.begin(), sets.end(), [&](const auto& a, const auto& b) {
        return min_vertex_of_set(a) < min_vertex_of_set(b);
    });
    for (auto& set : sets)
        std::sort(set.begin(), set.end(), [&](int a, int b) {
            return min_vertex_of_cell(a) < min_vertex_of_cell(b);
        });

    MIndex m;
    for (int r = 0; r < 5; ++r) {
        for (int s = 0; s < 4; ++s) {
            const Cell& cell = cells[sets[r][s]];
            m.cell_wset[r * 4 + s] = cell.mask;

            // parts = components of the complement restricted to the cell
            std::vector<std::vector<bool>> nonadj(16, std::vector<bool>(16, false));
            for (int a = 0; a < 16; ++a)
                for (int b = 0; b < 16; ++b)
                    nonadj[a][b] = a != b && !e.has_edge(cell.members[a], cell.members[b]);
            auto parts = components(16, nonadj);
            if (parts.size() != 4)
                throw structure_error("cell (" + std::to_string(r) + "," +
                                      std::to_string(s) + ") splits into " +
                                      std::to_string(parts.size()) + " parts, want 4");
            for (auto& part : parts) {
                if (part.size() != 4)
                    throw structure_error("cell part of size " +
                                          std::to_string(part.size()) + ", want 4");
                for (int a : part)
                    for (int b : part)
                        if (a != b && e.has_edge(cell.members[a], cell.members[b]))
                            throw structure_error("edge inside a cell part");
            }
            for (std::size_t pa = 0; pa < parts.size(); ++pa)
                for (std::size_t pb = pa + 1; pb < parts.size(); ++pb)
                    for (int a : parts[pa])
                        for (int b : parts[pb])
                            if (!e.has_edge(cell.members[a], cell.members[b]))
                                throw structure_error("missing edge across cell parts");

            std::sort(parts.begin(), parts.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            for (int t = 0; t < 4; ++t)
                for (int u = 0; u < 4; ++u) {
                    int v = cell.members[parts[t][u]];
                    m.to_vertex[MIndex::flat(r, s, t, u)] = v;
                    m.from_vertex[v] = Coord{r, s, t, u};
                }
        }
    }

    // the 320 images must exhaust [0,320)
    std::vector<bool> hit(n, false);
    for (int v : m.to_vertex) {
        if (v < 0 || v >= n || hit[v])
            throw structure_error("index map is not a bijection");
        hit[v] = true;
    }
    return m;
}

bool CheckReport::all_passed() const
{
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

std::string CheckReport::render() const
{
    std::ostringstream os;
    for (const auto& l : lines)
        os << (l.pass ? "PASS" : "FAIL") << " " << l.label << ": " << l.detail << "\n";
    return os.str();
}

namespace {

struct LineBuilder {
    CheckLine line;
    long long checked = 0;

    explicit LineBuilder(std::string label)
    {
        line.pass = true;
        line.label = std::move(label);
    }

    void fail(const std::string& detail)
    {
        if (line.pass) {
            line.pass = false;
            line.detail = detail;
        }
    }

    CheckLine finish()
    {
        if (line.pass)
            line.detail = std::to_string(checked) + " checks";
        return line;
    }
};

} // namespace

CheckReport verify_hierarchy(const Graph& e, const MIndex& m,
                             const std::vector<std::uint16_t>& w_mask)
{
    CheckReport rep;

    {
        LineBuilder b("w-set-size");
        for (int v = 0; v < MIndex::num_vertices; ++v) {
            ++b.checked;
            if (std::popcount(w_mask[v]) != 4)
                b.fail("vertex " + std::to_string(v) + " has |W| = " +
                       std::to_string(std::popcount(w_mask[v])));
        }
        rep.lines.push_back(b.finish());
    }

    {
        LineBuilder b("w-intersection-trichotomy");
        for (int v1 = 0; v1 < MIndex::num_vertices; ++v1) {
            const Coord& c1 = m.coord(v1);
            for (int v2 = 0; v2 < MIndex::num_vertices; ++v2) {
                const Coord& c2 = m.coord(v2);
                int got = std::popcount(static_cast<std::uint16_t>(w_mask[v1] & w_mask[v2]));
                int want = (c1.r == c2.r) ? (c1.s == c2.s ? 4 : 0) : 1;
                ++b.checked;
                if (got != want)
                    b.fail("pair (" + std::to_string(v1) + "," + std::to_string(v2) +
                           ") has |W∩W| = " + std::to_string(got) + ", want " +
                           std::to_string(want));
            }
        }
        rep.lines.push_back(b.finish());
    }

    {
        LineBuilder b("part-coclique");
        for (int r = 0; r < 5; ++r)
            for (int s = 0; s < 4; ++s)
                for (int t = 0; t < 4; ++t)
                    for (int u1 = 0; u1 < 4; ++u1)
                        for (int u2 = 0; u2 < 4; ++u2) {
                            if (u1 == u2)
                                continue;
                            ++b.checked;
                            if (e.has_edge(m.vertex(r, s, t, u1), m.vertex(r, s, t, u2)))
                                b.fail("edge inside part (" + std::to_string(r) + "," +
                                       std::to_string(s) + "," + std::to_string(t) + ")");
                        }
        rep.lines.push_back(b.finish());
    }

    {
        LineBuilder b("cross-part-complete");
        for (int r = 0; r < 5; ++r)
            for (int s = 0; s < 4; ++s)
                for (int t1 = 0; t1 < 4; ++t1)
                    for (int t2 = 0; t2 < 4; ++t2) {
                        if (t1 == t2)
                            continue;
                        for (int u1 = 0; u1 < 4; ++u1)
                            for (int u2 = 0; u2 < 4; ++u2) {
                                ++b.checked;
                                if (!e.has_edge(m.vertex(r, s, t1, u1),
                                                m.vertex(r, s, t2, u2)))
                                    b.fail("missing edge across parts in cell (" +
                                           std::to_string(r) + "," + std::to_string(s) +
                                           ")");
                            }
                    }
        rep.lines.push_back(b.finish());
    }

    {
        LineBuilder b("cell-set-separation");
        for (int r = 0; r < 5; ++r)
            for (int s1 = 0; s1 < 4; ++s1)
                for (int s2 = 0; s2 < 4; ++s2) {
                    if (s1 == s2)
                        continue;
                    for (int t1 = 0; t1 < 4; ++t1)
                        for (int u1 = 0; u1 < 4; ++u1)
                            for (int t2 = 0; t2 < 4; ++t2)
                                for (int u2 = 0; u2 < 4; ++u2) {
                                    ++b.checked;
                                    if (e.has_edge(m.vertex(r, s1, t1, u1),
                                                   m.vertex(r, s2, t2, u2)))
                                        b.fail("edge between cells " + std::to_string(s1) +
                                               " and " + std::to_string(s2) +
                                               " of cell set " + std::to_string(r));
                                }
                }
        rep.lines.push_back(b.finish());
    }

    {
        LineBuilder b("foreign-part-matching");
        for (int r1 = 0; r1 < 5; ++r1)
            for (int s1 = 0; s1 < 4; ++s1)
                for (int t1 = 0; t1 < 4; ++t1)
                    for (int u1 = 0; u1 < 4; ++u1) {
                        int v1 = m.vertex(r1, s1, t1, u1);
                        for (int r2 = 0; r2 < 5; ++r2) {
                            if (r2 == r1)
                                continue;
                            for (int s2 = 0; s2 < 4; ++s2)
                                for (int t2 = 0; t2 < 4; ++t2) {
                                    int hits = 0;
                                    for (int u = 0; u < 4; ++u)
                                        if (e.has_edge(v1, m.vertex(r2, s2, t2, u)))
                                            ++hits;
                                    ++b.checked;
                                    if (hits != 1)
                                        b.fail("vertex " + std::to_string(v1) + " has " +
                                               std::to_string(hits) +
                                               " neighbors in a foreign part, want 1");
                                }
                        }
                    }
        rep.lines.push_back(b.finish());
    }

    {
        LineBuilder b("third-set-common-neighbors");
        for (int r1 = 0; r1 < 5; ++r1)
            for (int s1 = 0; s1 < 4; ++s1)
                for (int t1 = 0; t1 < 4; ++t1)
                    for (int u1 = 0; u1 < 4; ++u1)
                        for (int t2 = 0; t2 < 4; ++t2)
                            for (int u2 = 0; u2 < 4; ++u2) {
                                bool same_part_diff = t1 == t2 && u1 != u2;
                                bool diff_part = t1 != t2;
                                if (!same_part_diff && !diff_part)
                                    continue;
                                int v1 = m.vertex(r1, s1, t1, u1);
                                int v2 = m.vertex(r1, s1, t2, u2);
                                for (int r3 = 0; r3 < 5; ++r3) {
                                    if (r3 == r1)
                                        continue;
                                    for (int s3 = 0; s3 < 4; ++s3) {
                                        int hits = 0;
                                        for (int t = 0; t < 4; ++t)
                                            for (int u = 0; u < 4; ++u) {
                                                int w = m.vertex(r3, s3, t, u);
                                                if (e.has_edge(v1, w) && e.has_edge(v2, w))
                                                    ++hits;
                                            }
                                        int want = diff_part ? 1 : 0;
                                        ++b.checked;
                                        if (hits != want)
                                            b.fail("pair (" + std::to_string(v1) + "," +
                                                   std::to_string(v2) + ") has " +
                                                   std::to_string(hits) +
                                                   " common neighbors in cell (" +
                                                   std::to_string(r3) + "," +
                                                   std::to_string(s3) + "), want " +
                                                   std::to_string(want));
                                    }
                                }
                            }
        rep.lines.push_back(b.finish());
    }

    return rep;
}

bool CocliqueReport::all_ok() const
{
    if (!parts_ok || total_cocliques != 1280)
        return false;
    for (int c : cocliques_per_set)
        if (c != 256)
            return false;
    for (int d : divisions_per_set)
        if (d != 13824)
            return false;
    return true;
}

std::string CocliqueReport::render() const
{
    std::ostringstream os;
    os << (parts_ok ? "PASS" : "FAIL") << " cell-parts-are-4-cocliques: 80 parts\n";
    for (int r = 0; r < MIndex::num_sets; ++r)
        os << (cocliques_per_set[r] == 256 ? "PASS" : "FAIL") << " 16-cocliques in cell set "
           << r << ": " << cocliques_per_set[r] << "/256 verified\n";
    os << (total_cocliques == 1280 ? "PASS" : "FAIL")
       << " 16-cocliques total: " << total_cocliques << "/1280 verified\n";
    for (int r = 0; r < MIndex::num_sets; ++r)
        os << (divisions_per_set[r] == 13824 ? "PASS" : "FAIL")
           << " divisions of cell set " << r << ": " << divisions_per_set[r]
           << "/13824 verified\n";
    return os.str();
}

CocliqueReport coclique_census(const Graph& e, const MIndex& m)
{
    CocliqueReport rep;

    rep.parts_ok = true;
    for (int r = 0; r < 5; ++r)
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t)
                for (int u1 = 0; u1 < 4; ++u1)
                    for (int u2 = u1 + 1; u2 < 4; ++u2)
                        if (e.has_edge(m.vertex(r, s, t, u1), m.vertex(r, s, t, u2)))
                            rep.parts_ok = false;

    // all 24 permutations of [0,4), in std::next_permutation order
    std::array<std::array<int, 4>, 24> perms{};
    {
        std::array<int, 4> p{0, 1, 2, 3};
        int i = 0;
        do {
            perms[i++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
    }

    for (int r = 0; r < 5; ++r) {
        // selection (t0,t1,t2,t3): take part t_s in cell s; 16 vertices
        std::array<bool, 256> is_coclique{};
        int verified = 0;
        for (int sel = 0; sel < 256; ++sel) {
            std::array<int, 16> vs{};
            int idx = 0;
            for (int s = 0; s < 4; ++s) {
                int t = sel >> (2 * s) & 3;
                for (int u = 0; u < 4; ++u)
                    vs[idx++] = m.vertex(r, s, t, u);
            }
            bool ok = true;
            for (int a = 0; a < 16 && ok; ++a)
                for (int b = a + 1; b < 16; ++b)
                    if (e.has_edge(vs[a], vs[b])) {
                        ok = false;
                        break;
                    }
            is_coclique[sel] = ok;
            if (ok)
                ++verified;
        }
        rep.cocliques_per_set[r] = verified;
        rep.total_cocliques += verified;

        // divisions: parts of cell 0 keep their order, the parts of cells
        // 1..3 are permuted; slot j collects part j / p1[j] / p2[j] / p3[j]
        int divisions = 0;
        for (const auto& p1 : perms)
            for (const auto& p2 : perms)
                for (const auto& p3 : perms) {
                    bool ok = true;
                    int part_seen[4] = {0, 0, 0, 0}; // bitmask of used parts per cell
                    for (int j = 0; j < 4 && ok; ++j) {
                        int sel = j | p1[j] << 2 | p2[j] << 4 | p3[j] << 6;
                        if (!is_coclique[sel])
                            ok = false;
                        part_seen[0] |= 1 << j;
                        part_seen[1] |= 1 << p1[j];
                        part_seen[2] |= 1 << p2[j];
                        part_seen[3] |= 1 << p3[j];
                    }
                    // the four slots partition the cell set iff every part
                    // of every cell was used exactly once
                    if (ok && (part_seen[0] & part_seen[1] & part_seen[2] & part_seen[3]) == 0xF)
                        ++divisions;
                }
        rep.divisions_per_set[r] = divisions;
    }
    return rep;
}

} // namespace g24
