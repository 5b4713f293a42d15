#pragma once

#include "cwset/polygon.hpp"

#include <span>
#include <vector>

namespace cwset {

/// Finite union of convex polygons. Regions are compared up to measure zero;
/// boundary ownership is not tracked.
///
/// A region built from raw pieces may have overlapping pieces; the boolean
/// operations and normalized() always return interior-disjoint pieces.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<ConvexPolygon> pieces) : pieces_(std::move(pieces)) {}
    Region(std::initializer_list<ConvexPolygon> pieces) : pieces_(pieces) {}

    const std::vector<ConvexPolygon>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    bool empty() const { return pieces_.empty(); }

    /// Sum of piece areas (equals the measure once normalized).
    Scalar area() const;
    /// Pairwise interior-disjoint pieces covering the same point set.
    Region normalized() const;
    /// Concatenation of pieces without resolving overlaps.
    Region concat(const Region& o) const;

private:
    std::vector<ConvexPolygon> pieces_;
};

Region intersect(const Region& r1, const Region& r2);
Region subtract(const Region& r1, const Region& r2);
Region union_(const Region& r1, const Region& r2);
/// Area of the symmetric difference; zero iff the regions agree a.e.
Scalar symmetric_difference_area(const Region& r1, const Region& r2);

Region transform(const Mat2& a, const Region& r);
Region translate(const Vec2& v, const Region& r);
Region dilate(const Scalar& s, const Region& r);
/// Image of a region under an isometry z -> m (t + z).
Region apply(const Isometry& g, const Region& r);

/// Squared Euclidean distance from the origin to the closed region.
/// Throws std::invalid_argument for the empty region.
Scalar distance_to_origin(const Region& r);
/// True iff the origin lies in the closure of some piece. A convex piece of
/// positive area has a positive interior angle at every boundary point, so
/// this is exactly "the origin sees the interior with positive angular density".
bool origin_cone_angle_positive(const Region& r);

/// Squared distance from the origin to a closed convex polygon.
Scalar distance_to_origin(const ConvexPolygon& p);

}  // namespace cwset
