#pragma once

#include "cwset/region.hpp"

#include <string>
#include <vector>

namespace cwset {

/// Closed polar cone swept counter-clockwise from direction `from` to
/// direction `to`; the opening angle lies in (0, pi].
struct Cone {
    Vec2 from;
    Vec2 to;

    std::vector<HalfPlane> half_planes() const;
};

/// Finite union of interior-disjoint cones, or the whole plane. Boundaries are
/// exact direction vectors so pi/4 and pi/3 edges stay in Q(sqrt 3).
class Sector {
public:
    static Sector whole_plane();
    static Sector from_cones(std::vector<Cone> cones);
    static Sector cone(const Vec2& from, const Vec2& to) { return from_cones({{from, to}}); }

    static Sector right_half_plane();
    static Sector first_quadrant();
    static Sector first_octant();
    /// First octant together with its rotation by pi.
    static Sector first_and_fifth_octants();

    bool is_whole_plane() const { return whole_; }
    const std::vector<Cone>& cones() const { return cones_; }

    /// Pieces of p inside the sector (one per cone meeting p).
    std::vector<ConvexPolygon> clip(const ConvexPolygon& p) const;
    Region clip(const Region& r) const;
    Sector transformed(const Mat2& m) const;
    std::string describe() const;

private:
    bool whole_ = false;
    std::vector<Cone> cones_;
};

}  // namespace cwset
