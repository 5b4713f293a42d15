#include "cwset/region.hpp"

#include <stdexcept>

namespace cwset {

namespace {

// Pieces of p not covered by any of the given pieces.
std::vector<ConvexPolygon> residue(const ConvexPolygon& p, std::span<const ConvexPolygon> cover) {
    std::vector<ConvexPolygon> rest{p};
    for (const auto& q : cover) {
        if (rest.empty()) break;
        std::vector<ConvexPolygon> next;
        for (const auto& r : rest) {
            auto parts = subtract(r, q);
            next.insert(next.end(), std::make_move_iterator(parts.begin()), std::make_move_iterator(parts.end()));
        }
        rest = std::move(next);
    }
    return rest;
}

}  // namespace

Scalar Region::area() const {
    Scalar s;
    for (const auto& p : pieces_) s += p.area();
    return s;
}

Region Region::normalized() const {
    std::vector<ConvexPolygon> out;
    for (const auto& p : pieces_) {
        auto parts = residue(p, out);
        out.insert(out.end(), std::make_move_iterator(parts.begin()), std::make_move_iterator(parts.end()));
    }
    return Region(std::move(out));
}

Region Region::concat(const Region& o) const {
    std::vector<ConvexPolygon> out = pieces_;
    out.insert(out.end(), o.pieces_.begin(), o.pieces_.end());
    return Region(std::move(out));
}

Region intersect(const Region& r1, const Region& r2) {
    Region a = r1.normalized(), b = r2.normalized();
    std::vector<ConvexPolygon> out;
    for (const auto& p : a.pieces())
        for (const auto& q : b.pieces())
            if (auto x = intersect(p, q)) out.push_back(*std::move(x));
    return Region(std::move(out));
}

Region subtract(const Region& r1, const Region& r2) {
    Region a = r1.normalized();
    std::vector<ConvexPolygon> out;
    for (const auto& p : a.pieces()) {
        auto parts = residue(p, r2.pieces());
        out.insert(out.end(), std::make_move_iterator(parts.begin()), std::make_move_iterator(parts.end()));
    }
    return Region(std::move(out));
}

Region union_(const Region& r1, const Region& r2) { return r1.concat(r2).normalized(); }

Scalar symmetric_difference_area(const Region& r1, const Region& r2) {
    return subtract(r1, r2).area() + subtract(r2, r1).area();
}

Region transform(const Mat2& a, const Region& r) {
    if (a.det().is_zero()) throw DivisionByZero("singular transform");
    std::vector<ConvexPolygon> out;
    out.reserve(r.size());
    for (const auto& p : r.pieces()) out.push_back(p.transformed(a));
    return Region(std::move(out));
}

Region translate(const Vec2& v, const Region& r) {
    std::vector<ConvexPolygon> out;
    out.reserve(r.size());
    for (const auto& p : r.pieces()) out.push_back(p.translated(v));
    return Region(std::move(out));
}

Region dilate(const Scalar& s, const Region& r) {
    if (s.is_zero()) throw DivisionByZero("zero dilation");
    return transform(Mat2::scale(s), r);
}

Region apply(const Isometry& g, const Region& r) { return transform(g.m, translate(g.t, r)); }

Scalar distance_to_origin(const ConvexPolygon& p) {
    const Vec2 origin{0, 0};
    if (p.contains(origin)) return Scalar(0);
    const auto& vs = p.vertices();
    Scalar best = norm2(vs.front());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2& a = vs[i];
        const Vec2 e = vs[(i + 1) % vs.size()] - a;
        Scalar t = -dot(a, e) / norm2(e);
        Scalar d;
        if (t.sign() <= 0)
            d = norm2(a);
        else if (t >= Scalar(1))
            d = norm2(a + e);
        else
            d = norm2(a + t * e);
        best = min(best, d);
    }
    return best;
}

Scalar distance_to_origin(const Region& r) {
    if (r.empty()) throw std::invalid_argument("distance from the empty region is undefined");
    Scalar best = distance_to_origin(r.pieces().front());
    for (const auto& p : r.pieces()) best = min(best, distance_to_origin(p));
    return best;
}

bool origin_cone_angle_positive(const Region& r) {
    const Vec2 origin{0, 0};
    for (const auto& p : r.pieces())
        if (p.contains(origin)) return true;
    return false;
}

}  // namespace cwset
