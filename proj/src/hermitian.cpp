#include "g24/hermitian.hpp"

#include <stdexcept>
#include <string>

namespace g24 {

gf::Fe hermitean_form(const Triple& a, const Triple& b)
{
    using namespace gf;
    Fe s = mul(a[0], conj(b[2]));
    s = add(s, mul(a[1], conj(b[1])));
    s = add(s, mul(a[2], conj(b[0])));
    return s;
}

ProjectivePoint normalize(const Triple& raw)
{
    for (int i = 0; i < 3; ++i) {
        if (raw[i] != 0) {
            gf::Fe s = gf::inv(raw[i]);
            ProjectivePoint p;
            for (int k = 0; k < 3; ++k)
                p.c[k] = gf::mul(raw[k], s);
            return p;
        }
    }
    throw std::invalid_argument("normalize: zero triple is not a projective point");
}

static int pack(const Triple& c)
{
    return (c[0] << 8) | (c[1] << 4) | c[2];
}

int PointTables::index_of(const ProjectivePoint& p) const
{
    return by_coords_[pack(p.c)] - 1;
}

PointTables enumerate_points()
{
    PointTables t;
    t.points.reserve(273);
    t.points.push_back(ProjectivePoint{{0, 0, 1}});
    for (unsigned c3 = 0; c3 < 16; ++c3)
        t.points.push_back(ProjectivePoint{{0, 1, static_cast<gf::Fe>(c3)}});
    for (unsigned c2 = 0; c2 < 16; ++c2)
        for (unsigned c3 = 0; c3 < 16; ++c3)
            t.points.push_back(
                ProjectivePoint{{1, static_cast<gf::Fe>(c2), static_cast<gf::Fe>(c3)}});

    const int n = t.num_points();
    t.is_isotropic.resize(n);
    t.iso_rank.assign(n, -1);
    t.noniso_rank.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        t.by_coords_[pack(t.points[i].c)] = i + 1;
        bool iso = hermitean_form(t.points[i], t.points[i]) == 0;
        t.is_isotropic[i] = iso;
        if (iso) {
            t.iso_rank[i] = static_cast<int>(t.iso_point.size());
            t.iso_point.push_back(i);
        } else {
            t.noniso_rank[i] = static_cast<int>(t.noniso_point.size());
            t.noniso_point.push_back(i);
        }
    }

    const int n_iso = t.num_isotropic();
    t.polar_iso.reserve(t.noniso_point.size());
    for (int p : t.noniso_point) {
        Bitset m(n_iso);
        for (int r = 0; r < n_iso; ++r)
            if (hermitean_form(t.points[t.iso_point[r]], t.points[p]) == 0)
                m.set(r);
        if (m.count() != 5)
            throw std::logic_error("enumerate_points: polar line of point " +
                                   std::to_string(p) + " has " +
                                   std::to_string(m.count()) + " isotropic points, want 5");
        t.polar_iso.push_back(std::move(m));
    }
    return t;
}

const Bitset& polar_isotropics(const PointTables& t, int point_index)
{
    if (point_index < 0 || point_index >= t.num_points())
        throw std::invalid_argument("polar_isotropics: point index out of range");
    if (t.is_isotropic[point_index])
        throw std::invalid_argument("polar_isotropics: point " +
                                    std::to_string(point_index) + " is isotropic");
    return t.polar_iso[t.noniso_rank[point_index]];
}

} // namespace g24
