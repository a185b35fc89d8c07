#include "g24/construction.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

namespace g24 {

std::vector<Triangle> enumerate_bases(const PointTables& tables)
{
    const int n = tables.num_nonisotropic();

    // orthogonality among nonisotropic ranks; h(a,b)=0 iff h(b,a)=0
    std::vector<Bitset> ortho(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
        const ProjectivePoint& pi = tables.points[tables.noniso_point[i]];
        for (int j = i + 1; j < n; ++j) {
            const ProjectivePoint& pj = tables.points[tables.noniso_point[j]];
            if (hermitean_form(pi, pj) == 0) {
                ortho[i].set(j);
                ortho[j].set(i);
            }
        }
    }

    std::vector<Triangle> out;
    Bitset common(n);
    for (int i = 0; i < n; ++i) {
        ortho[i].for_each([&](int j) {
            if (j <= i)
                return;
            common.assign_and(ortho[i], ortho[j]);
            common.clear_through(j);
            common.for_each([&](int k) {
                Triangle tri;
                tri.basis = {i, j, k};
                tri.iso_set = tables.polar_iso[i] | tables.polar_iso[j] | tables.polar_iso[k];
                if (tri.iso_set.count() != 15)
                    throw std::logic_error(
                        "enumerate_bases: polar iso-sets of an orthogonal triple overlap");
                out.push_back(std::move(tri));
            });
        });
    }
    return out;
}

Graph build_G(const std::vector<Triangle>& triangles)
{
    const int n = static_cast<int>(triangles.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (triangles[i].iso_set.and_count(triangles[j].iso_set) == 3)
                edges.emplace_back(i, j);
    return Graph::build(n, edges, "G");
}

std::pair<std::vector<int>, std::vector<int>> split_B_C(const std::vector<Triangle>& triangles)
{
    std::vector<int> b, c;
    for (int v = 0; v < static_cast<int>(triangles.size()); ++v) {
        if (triangles[v].iso_set.test(0))
            b.push_back(v);
        else
            c.push_back(v);
    }
    return {std::move(b), std::move(c)};
}

XW compute_X_W(const PointTables& tables, const std::vector<Triangle>& triangles,
               const Graph& g, const std::vector<int>& b_vertices,
               const std::vector<int>& c_vertices)
{
    XW xw;
    const int n_noniso = tables.num_nonisotropic();
    std::vector<int> x_pos(n_noniso, -1); // noniso rank -> position in x
    for (int rank = 0; rank < n_noniso; ++rank)
        if (tables.polar_iso[rank].test(0)) {
            x_pos[rank] = static_cast<int>(xw.x.size());
            xw.x.push_back(rank);
        }

    // per vertex of B: which elements of X sit in its basis
    Bitset in_b(g.size());
    std::vector<std::uint16_t> assigned(g.size(), 0);
    for (int b : b_vertices) {
        in_b.set(b);
        for (int rank : triangles[b].basis)
            if (x_pos[rank] >= 0)
                assigned[b] |= static_cast<std::uint16_t>(1u << x_pos[rank]);
    }

    const std::uint16_t full = static_cast<std::uint16_t>((1u << xw.x.size()) - 1);
    xw.w.reserve(c_vertices.size());
    for (int v : c_vertices) {
        std::uint16_t blocked = 0;
        Bitset nb = g.neighbors(v) & in_b;
        nb.for_each([&](int b) { blocked |= assigned[b]; });
        xw.w.push_back(static_cast<std::uint16_t>(full & ~blocked));
    }
    return xw;
}

Graph build_H(const Graph& e, const XW& xw)
{
    const int nc = e.size();
    const int nx = static_cast<int>(xw.x.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nc; ++i) {
        e.neighbors(i).for_each([&](int j) {
            if (j > i)
                edges.emplace_back(i, j);
        });
        for (int p = 0; p < nx; ++p)
            if (xw.w[i] >> p & 1u)
                edges.emplace_back(i, nc + p);
    }
    return Graph::build(nc + nx, edges, "H");
}

Graph build_F(const Graph& e, const MIndex& m, int excluded_r)
{
    if (excluded_r < 0 || excluded_r >= MIndex::num_sets)
        throw std::invalid_argument("build_F: cell set index out of range");
    std::vector<int> keep;
    keep.reserve(256);
    for (int r = 0; r < MIndex::num_sets; ++r) {
        if (r == excluded_r)
            continue;
        for (int s = 0; s < 4; ++s)
            for (int t = 0; t < 4; ++t)
                for (int u = 0; u < 4; ++u)
                    keep.push_back(m.vertex(r, s, t, u));
    }
    return e.induced_subgraph(keep, "F_" + std::to_string(excluded_r));
}

Construction build_all()
{
    Construction c;
    c.tables = enumerate_points();
    c.triangles = enumerate_bases(c.tables);
    c.g = build_G(c.triangles);
    std::tie(c.b_vertices, c.c_vertices) = split_B_C(c.triangles);
    c.e = c.g.induced_subgraph(c.c_vertices, "E");
    c.xw = compute_X_W(c.tables, c.triangles, c.g, c.b_vertices, c.c_vertices);
    c.m = build_M(c.e, c.xw.w);
    c.h = build_H(c.e, c.xw);
    for (int r = 0; r < MIndex::num_sets; ++r)
        c.f[r] = build_F(c.e, c.m, r);
    return c;
}

} // namespace g24
