#include <doctest.h>

#include <map>
#include <set>

#include "g24/analysis.hpp"
#include "g24/construction.hpp"
#include "support.hpp"

using testsupport::built;

TEST_SUITE("construction") {

TEST_CASE("triangle census")
{
    const auto& c = built();
    REQUIRE(c.triangles.size() == 416);

    std::vector<int> per_noniso(208, 0);
    std::vector<int> per_iso(65, 0);
    for (const auto& tri : c.triangles) {
        CHECK(tri.iso_set.count() == 15);
        CHECK(tri.basis[0] < tri.basis[1]);
        CHECK(tri.basis[1] < tri.basis[2]);
        for (int rank : tri.basis)
            ++per_noniso[rank];
        tri.iso_set.for_each([&](int iso) { ++per_iso[iso]; });
    }
    for (int rank = 0; rank < 208; ++rank)
        CHECK(per_noniso[rank] == 6);
    for (int iso = 0; iso < 65; ++iso)
        CHECK(per_iso[iso] == 96);
}

TEST_CASE("triangle bases are pairwise orthogonal")
{
    const auto& c = built();
    for (const auto& tri : c.triangles)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                const auto& pa = c.tables.points[c.tables.noniso_point[tri.basis[a]]];
                const auto& pb = c.tables.points[c.tables.noniso_point[tri.basis[b]]];
                CHECK(g24::hermitean_form(pa, pb) == 0);
            }
}

TEST_CASE("iso-set intersection histogram")
{
    const auto& c = built();
    std::map<int, long long> histogram;
    for (int i = 0; i < 416; ++i)
        for (int j = i + 1; j < 416; ++j)
            ++histogram[c.triangles[i].iso_set.and_count(c.triangles[j].iso_set)];

    // sharing exactly 3 points is the adjacency rule, so that bucket is the
    // edge count of G
    CHECK(histogram[3] == 20800);
    // regression snapshot of the full distribution over the 86320 pairs
    std::map<int, long long> expected = {{2, 31200}, {3, 20800}, {5, 34320}};
    CHECK(histogram == expected);
}

TEST_CASE("G is the srg(416,100,36,20)")
{
    const auto& c = built();
    CHECK(c.g.size() == 416);
    CHECK(c.g.edge_count() == 20800);
    auto res = g24::verify_srg(c.g);
    REQUIRE(res.ok());
    CHECK(*res.params == g24::SrgParams{416, 100, 36, 20});
    for (int i = 0; i < 416; ++i)
        CHECK(!c.g.has_edge(i, i));
}

TEST_CASE("B/C split")
{
    const auto& c = built();
    CHECK(c.b_vertices.size() == 96);
    CHECK(c.c_vertices.size() == 320);
    std::set<int> all(c.b_vertices.begin(), c.b_vertices.end());
    all.insert(c.c_vertices.begin(), c.c_vertices.end());
    CHECK(all.size() == 416);
    for (int v : c.b_vertices)
        CHECK(c.triangles[v].iso_set.test(0));
    for (int v : c.c_vertices)
        CHECK(!c.triangles[v].iso_set.test(0));
}

TEST_CASE("E is the induced subgraph on C and is 76-regular")
{
    const auto& c = built();
    CHECK(c.e.size() == 320);
    CHECK(c.e.edge_count() == 12160);
    for (int p = 0; p < 320; ++p) {
        CHECK(c.e.degree(p) == 76);
        for (int q = p + 1; q < 320; ++q)
            CHECK(c.e.has_edge(p, q) == c.g.has_edge(c.c_vertices[p], c.c_vertices[q]));
    }
}

TEST_CASE("X and W")
{
    const auto& c = built();
    REQUIRE(c.xw.x.size() == 16);
    for (std::size_t i = 0; i + 1 < c.xw.x.size(); ++i)
        CHECK(c.xw.x[i] < c.xw.x[i + 1]);
    for (int rank : c.xw.x)
        CHECK(c.tables.polar_iso[rank].test(0));

    std::map<std::uint16_t, int> wset_sizes;
    for (auto w : c.xw.w) {
        CHECK(std::popcount(w) == 4);
        ++wset_sizes[w];
    }
    CHECK(wset_sizes.size() == 20);
    for (const auto& [mask, n] : wset_sizes)
        CHECK(n == 16);
}

TEST_CASE("H extends E by a 16-vertex coclique wired through W")
{
    const auto& c = built();
    REQUIRE(c.h.size() == 336);
    // first 320 rows equal E bit-for-bit
    for (int p = 0; p < 320; ++p)
        for (int q = 0; q < 320; ++q)
            CHECK(c.h.has_edge(p, q) == c.e.has_edge(p, q));
    // D is a coclique
    for (int a = 320; a < 336; ++a)
        for (int b = a + 1; b < 336; ++b)
            CHECK(!c.h.has_edge(a, b));
    // cross edges realize W
    for (int p = 0; p < 320; ++p) {
        for (int x = 0; x < 16; ++x)
            CHECK(c.h.has_edge(p, 320 + x) == bool(c.xw.w[p] >> x & 1u));
        CHECK(c.h.degree(p) == 80);
    }
}

TEST_CASE("the five F variants are 60-regular on 256 vertices")
{
    const auto& c = built();
    for (int r = 0; r < 5; ++r) {
        const auto& f = c.f[r];
        REQUIRE(f.size() == 256);
        CHECK(f.edge_count() == 7680);
        for (int v = 0; v < 256; ++v)
            CHECK(f.degree(v) == 60);
    }
}

TEST_CASE("F vertex order follows the hierarchy indices")
{
    const auto& c = built();
    // excluded set 0: first vertex of F_0 is M(1,0,0,0)
    CHECK(c.f[0].has_edge(0, 1) ==
          c.e.has_edge(c.m.vertex(1, 0, 0, 0), c.m.vertex(1, 0, 0, 1)));
    // excluded set 4: first vertex is M(0,0,0,0)
    CHECK(c.f[4].has_edge(0, 1) ==
          c.e.has_edge(c.m.vertex(0, 0, 0, 0), c.m.vertex(0, 0, 0, 1)));
    CHECK_THROWS_AS(g24::build_F(c.e, c.m, 5), std::invalid_argument);
}

} // TEST_SUITE
