#include <doctest.h>

#include <stdexcept>

#include "g24/hermitian.hpp"

using g24::Bitset;
using g24::enumerate_points;
using g24::hermitean_form;
using g24::normalize;
using g24::PointTables;
using g24::ProjectivePoint;
using g24::Triple;

namespace {

const PointTables& tables()
{
    static const PointTables t = enumerate_points();
    return t;
}

} // namespace

TEST_SUITE("hermitian") {

TEST_CASE("form on basis vectors")
{
    CHECK(hermitean_form(Triple{1, 0, 0}, Triple{1, 0, 0}) == 0);
    CHECK(hermitean_form(Triple{0, 1, 0}, Triple{0, 1, 0}) == 1);
    CHECK(hermitean_form(Triple{1, 0, 0}, Triple{0, 0, 1}) == 1);
}

TEST_CASE("normalization")
{
    ProjectivePoint p = normalize(Triple{0, 5, 7});
    CHECK(p.c[0] == 0);
    CHECK(p.c[1] == 1);
    ProjectivePoint q = normalize(Triple{0, 1, g24::gf::mul(g24::gf::inv(5), 7)});
    CHECK(p == q);
    CHECK_THROWS_AS(normalize(Triple{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("point census")
{
    const auto& t = tables();
    CHECK(t.num_points() == 273);
    CHECK(t.num_isotropic() == 65);
    CHECK(t.num_nonisotropic() == 208);
    // first point in enumeration order is (0,0,1), which is isotropic
    CHECK(t.points[0] == ProjectivePoint{{0, 0, 1}});
    CHECK(t.is_isotropic[0]);
    CHECK(t.iso_rank[0] == 0);
    CHECK(t.is_isotropic[t.index_of(ProjectivePoint{{1, 0, 0}})]);
}

TEST_CASE("enumeration order and index lookup")
{
    const auto& t = tables();
    // shape precedence (0,0,1) < (0,1,*) < (1,*,*)
    for (int i = 1; i <= 16; ++i) {
        CHECK(t.points[i].c[0] == 0);
        CHECK(t.points[i].c[1] == 1);
        CHECK(t.points[i].c[2] == i - 1);
    }
    for (int i = 17; i < 273; ++i)
        CHECK(t.points[i].c[0] == 1);
    for (int i = 0; i < 273; ++i)
        CHECK(t.index_of(t.points[i]) == i);
}

TEST_CASE("polar lines carry 5 isotropic points, each isotropic on 16 polars")
{
    const auto& t = tables();
    std::vector<int> appearances(65, 0);
    long long total = 0;
    for (int rank = 0; rank < 208; ++rank) {
        const Bitset& m = t.polar_iso[rank];
        CHECK(m.count() == 5);
        total += m.count();
        m.for_each([&](int iso) { ++appearances[iso]; });
    }
    CHECK(total == 1040); // 208*5 = 65*16
    for (int iso = 0; iso < 65; ++iso)
        CHECK(appearances[iso] == 16);
}

TEST_CASE("polar_isotropics rejects isotropic and out-of-range input")
{
    const auto& t = tables();
    CHECK_THROWS_AS(g24::polar_isotropics(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(g24::polar_isotropics(t, 273), std::invalid_argument);
    int noniso = t.noniso_point[0];
    CHECK(g24::polar_isotropics(t, noniso).count() == 5);
}

TEST_CASE("hermitean symmetry over all ordered pairs")
{
    const auto& t = tables();
    for (int i = 0; i < 273; ++i)
        for (int j = 0; j < 273; ++j) {
            g24::gf::Fe hij = hermitean_form(t.points[i], t.points[j]);
            g24::gf::Fe hji = hermitean_form(t.points[j], t.points[i]);
            CHECK(hij == g24::gf::conj(hji));
        }
}

TEST_CASE("h(p,p) lies in the fixed field GF(4)")
{
    const auto& t = tables();
    for (int i = 0; i < 273; ++i) {
        g24::gf::Fe v = hermitean_form(t.points[i], t.points[i]);
        CHECK(g24::gf::conj(v) == v);
    }
}

TEST_CASE("orthogonality is projective: scaling preserves zero status")
{
    const auto& t = tables();
    // exhaustive over scalars for a grid of point pairs
    for (int i = 0; i < 273; i += 13)
        for (int j = 0; j < 273; j += 17) {
            bool zero = hermitean_form(t.points[i], t.points[j]) == 0;
            for (unsigned s = 1; s < 16; ++s) {
                Triple a = t.points[i].c, b = t.points[j].c;
                for (auto& x : a)
                    x = g24::gf::mul(x, static_cast<g24::gf::Fe>(s));
                CHECK((hermitean_form(a, b) == 0) == zero);
                for (auto& x : b)
                    x = g24::gf::mul(x, static_cast<g24::gf::Fe>(s));
                CHECK((hermitean_form(t.points[i].c, b) == 0) == zero);
            }
        }
}

} // TEST_SUITE
