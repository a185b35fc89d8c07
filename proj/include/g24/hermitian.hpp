#pragma once

#include <array>
#include <compare>
#include <vector>

#include "g24/bitset.hpp"
#include "g24/gf16.hpp"

namespace g24 {

using Triple = std::array<gf::Fe, 3>;

// A point of PG(2,16): a homogeneous coordinate triple normalized so that
// the first nonzero coordinate is 1. There are 273 of them.
struct ProjectivePoint {
    Triple c{0, 0, 0};
    auto operator<=>(const ProjectivePoint&) const = default;
};

// a1*conj(b3) + a2*conj(b2) + a3*conj(b1)
gf::Fe hermitean_form(const Triple& a, const Triple& b);
inline gf::Fe hermitean_form(const ProjectivePoint& a, const ProjectivePoint& b)
{
    return hermitean_form(a.c, b.c);
}

// Scale a nonzero triple to its normalized representative.
ProjectivePoint normalize(const Triple& raw);

// The full point census of PG(2,16) with the isotropic/nonisotropic split
// and, for every nonisotropic point, the isotropic content of its polar line.
// Built once; read-only afterwards.
struct PointTables {
    std::vector<ProjectivePoint> points; // all 273, enumeration order
    std::vector<bool> is_isotropic;      // by point index
    std::vector<int> iso_rank;           // point index -> [0,65), -1 if nonisotropic
    std::vector<int> noniso_rank;        // point index -> [0,208), -1 if isotropic
    std::vector<int> iso_point;          // iso rank -> point index
    std::vector<int> noniso_point;       // noniso rank -> point index
    std::vector<Bitset> polar_iso;       // by noniso rank: 65-bit mask of iso ranks

    int num_points() const { return static_cast<int>(points.size()); }
    int num_isotropic() const { return static_cast<int>(iso_point.size()); }
    int num_nonisotropic() const { return static_cast<int>(noniso_point.size()); }

    // index of a normalized point, -1 if the triple is not in the table
    int index_of(const ProjectivePoint& p) const;

private:
    friend PointTables enumerate_points();
    std::array<int, 4096> by_coords_{}; // packed coords -> point index + 1
};

// Enumerate all points in the fixed order (0,0,1), then (0,1,*), then
// (1,*,*) with trailing coordinates scanned in increasing value. The
// isotropic numbering induced by this order pins down every later graph.
PointTables enumerate_points();

// Iso-rank set of the polar line of a nonisotropic point (exactly 5 bits).
// Throws std::invalid_argument if the point is isotropic or out of range.
const Bitset& polar_isotropics(const PointTables& t, int point_index);

} // namespace g24
