#pragma once

#include "cwset/geom2d.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cwset {

/// Closed half-plane { z : nx*z.x + ny*z.y + c >= 0 }.
struct HalfPlane {
    Scalar nx, ny, c;

    /// Points on or to the left of the directed line through p with direction dir.
    static HalfPlane left_of(const Vec2& p, const Vec2& dir);
    Scalar eval(const Vec2& z) const { return nx * z.x + ny * z.y + c; }
    HalfPlane complement() const { return {-nx, -ny, -c}; }
};

/// Floating-point bounding box, padded outward so it never excludes a point
/// of the exact polygon. Used only for quick rejection.
struct FloatBox {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    bool overlaps(const FloatBox& o) const {
        return xmin < o.xmax && o.xmin < xmax && ymin < o.ymax && o.ymin < ymax;
    }
};

/// Convex polygon with positive area, vertices counter-clockwise with no
/// repeated or collinear consecutive vertices.
class ConvexPolygon {
public:
    /// Builds from vertices in either orientation; drops duplicates and
    /// collinear vertices. Throws std::invalid_argument unless the result is
    /// strictly convex with positive area.
    static ConvexPolygon from_vertices(std::vector<Vec2> vertices);
    /// Convex hull of an arbitrary point set (the "conv{...}" of a vertex list).
    static ConvexPolygon hull(std::vector<Vec2> points);
    /// Axis-aligned box [x0, x1] x [y0, y1].
    static ConvexPolygon box(const Scalar& x0, const Scalar& y0, const Scalar& x1, const Scalar& y1);
    /// Like from_vertices but returns nullopt for degenerate input.
    static std::optional<ConvexPolygon> try_from_vertices(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Scalar& area() const { return area_; }
    const FloatBox& float_box() const { return fbox_; }

    Scalar min_x() const;
    Scalar max_x() const;
    Scalar min_y() const;
    Scalar max_y() const;

    std::vector<HalfPlane> edge_half_planes() const;
    /// Point in the closed polygon.
    bool contains(const Vec2& p) const;
    /// Point in the open interior.
    bool contains_interior(const Vec2& p) const;

    std::optional<ConvexPolygon> clip(const HalfPlane& h) const;
    ConvexPolygon transformed(const Mat2& m) const;
    ConvexPolygon translated(const Vec2& v) const;

    /// Same point set (cyclic rotation of the vertex list allowed).
    bool same_shape(const ConvexPolygon& o) const;

private:
    explicit ConvexPolygon(std::vector<Vec2> ccw);
    std::vector<Vec2> vertices_;
    Scalar area_;
    FloatBox fbox_;
};

/// Twice the signed area of a closed vertex loop (shoelace).
Scalar twice_signed_area(std::span<const Vec2> loop);

/// Intersection of two convex polygons; nullopt when it has zero area.
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q);
/// p minus q as interior-disjoint convex pieces, peeling off one edge
/// half-plane of q at a time.
std::vector<ConvexPolygon> subtract(const ConvexPolygon& p, const ConvexPolygon& q);
/// Convex decomposition of a simple polygon (either orientation) by ear clipping.
std::vector<ConvexPolygon> decompose_simple_polygon(std::vector<Vec2> loop);

}  // namespace cwset
