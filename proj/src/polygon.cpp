#include "cwset/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwset {

namespace {

FloatBox float_box_of(const std::vector<Vec2>& vs) {
    FloatBox b{INFINITY, INFINITY, -INFINITY, -INFINITY};
    for (const auto& v : vs) {
        double x = v.x.to_double(), y = v.y.to_double();
        b.xmin = std::min(b.xmin, x);
        b.xmax = std::max(b.xmax, x);
        b.ymin = std::min(b.ymin, y);
        b.ymax = std::max(b.ymax, y);
    }
    auto pad = [](double v) { return 1e-9 * (1.0 + std::abs(v)); };
    b.xmin -= pad(b.xmin);
    b.ymin -= pad(b.ymin);
    b.xmax += pad(b.xmax);
    b.ymax += pad(b.ymax);
    return b;
}

// Removes cyclically repeated and collinear vertices in place.
void simplify_loop(std::vector<Vec2>& vs) {
    bool changed = true;
    while (changed && vs.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < vs.size() && vs.size() >= 3;) {
            const Vec2& prev = vs[(i + vs.size() - 1) % vs.size()];
            const Vec2& next = vs[(i + 1) % vs.size()];
            if (vs[i] == prev || cross(vs[i] - prev, next - vs[i]).is_zero()) {
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                ++i;
            }
        }
    }
    if (vs.size() == 2 && vs[0] == vs[1]) vs.pop_back();
}

bool strictly_convex_ccw(const std::vector<Vec2>& vs) {
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % n];
        const Vec2& c = vs[(i + 2) % n];
        if (cross(b - a, c - b).sign() <= 0) return false;
    }
    return true;
}

}  // namespace

HalfPlane HalfPlane::left_of(const Vec2& p, const Vec2& dir) {
    // cross(dir, z - p) >= 0
    Scalar nx = -dir.y, ny = dir.x;
    return {nx, ny, -(nx * p.x + ny * p.y)};
}

Scalar twice_signed_area(std::span<const Vec2> loop) {
    Scalar s;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(loop[i], loop[(i + 1) % n]);
    return s;
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> ccw) : vertices_(std::move(ccw)) {
    area_ = twice_signed_area(vertices_) / Scalar(2);
    fbox_ = float_box_of(vertices_);
}

std::optional<ConvexPolygon> ConvexPolygon::try_from_vertices(std::vector<Vec2> vertices) {
    simplify_loop(vertices);
    if (vertices.size() < 3) return std::nullopt;
    int s = twice_signed_area(vertices).sign();
    if (s == 0) return std::nullopt;
    if (s < 0) std::reverse(vertices.begin(), vertices.end());
    if (!strictly_convex_ccw(vertices)) return std::nullopt;
    return ConvexPolygon(std::move(vertices));
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Vec2> vertices) {
    auto p = try_from_vertices(std::move(vertices));
    if (!p) throw std::invalid_argument("vertex loop is not a convex polygon of positive area");
    return *std::move(p);
}

ConvexPolygon ConvexPolygon::hull(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) throw std::invalid_argument("hull needs three distinct points");
    std::vector<Vec2> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]).sign() <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
        const auto& p = points[i];
        while (k >= t && cross(h[k - 1] - h[k - 2], p - h[k - 2]).sign() <= 0) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    return from_vertices(std::move(h));
}

ConvexPolygon ConvexPolygon::box(const Scalar& x0, const Scalar& y0, const Scalar& x1, const Scalar& y1) {
    return from_vertices({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

Scalar ConvexPolygon::min_x() const {
    Scalar m = vertices_.front().x;
    for (const auto& v : vertices_) m = min(m, v.x);
    return m;
}
Scalar ConvexPolygon::max_x() const {
    Scalar m = vertices_.front().x;
    for (const auto& v : vertices_) m = max(m, v.x);
    return m;
}
Scalar ConvexPolygon::min_y() const {
    Scalar m = vertices_.front().y;
    for (const auto& v : vertices_) m = min(m, v.y);
    return m;
}
Scalar ConvexPolygon::max_y() const {
    Scalar m = vertices_.front().y;
    for (const auto& v : vertices_) m = max(m, v.y);
    return m;
}

std::vector<HalfPlane> ConvexPolygon::edge_half_planes() const {
    std::vector<HalfPlane> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % vertices_.size()];
        out.push_back(HalfPlane::left_of(a, b - a));
    }
    return out;
}

bool ConvexPolygon::contains(const Vec2& p) const {
    for (const auto& h : edge_half_planes())
        if (h.eval(p).sign() < 0) return false;
    return true;
}

bool ConvexPolygon::contains_interior(const Vec2& p) const {
    for (const auto& h : edge_half_planes())
        if (h.eval(p).sign() <= 0) return false;
    return true;
}

std::optional<ConvexPolygon> ConvexPolygon::clip(const HalfPlane& h) const {
    const std::size_t n = vertices_.size();
    std::vector<Scalar> values;
    std::vector<int> signs;
    values.reserve(n);
    signs.reserve(n);
    bool any_neg = false, any_pos = false;
    for (const auto& v : vertices_) {
        values.push_back(h.eval(v));
        signs.push_back(values.back().sign());
        any_neg |= signs.back() < 0;
        any_pos |= signs.back() > 0;
    }
    if (!any_neg) return *this;
    if (!any_pos) return std::nullopt;
    std::vector<Vec2> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        if (signs[i] >= 0) out.push_back(vertices_[i]);
        if (signs[i] * signs[j] < 0) {
            Scalar t = values[i] / (values[i] - values[j]);
            out.push_back(vertices_[i] + t * (vertices_[j] - vertices_[i]));
        }
    }
    return try_from_vertices(std::move(out));
}

ConvexPolygon ConvexPolygon::transformed(const Mat2& m) const {
    if (m.det().is_zero()) throw DivisionByZero("singular transform");
    std::vector<Vec2> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(m * v);
    if (m.det().sign() < 0) std::reverse(out.begin(), out.end());
    return ConvexPolygon(std::move(out));
}

ConvexPolygon ConvexPolygon::translated(const Vec2& v) const {
    std::vector<Vec2> out;
    out.reserve(vertices_.size());
    for (const auto& p : vertices_) out.push_back(p + v);
    return ConvexPolygon(std::move(out));
}

bool ConvexPolygon::same_shape(const ConvexPolygon& o) const {
    const std::size_t n = vertices_.size();
    if (n != o.vertices_.size()) return false;
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = vertices_[i] == o.vertices_[(i + shift) % n];
        if (ok) return true;
    }
    return false;
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (!p.float_box().overlaps(q.float_box())) return std::nullopt;
    std::optional<ConvexPolygon> cur = p;
    for (const auto& h : q.edge_half_planes()) {
        cur = cur->clip(h);
        if (!cur) return std::nullopt;
    }
    return cur;
}

std::vector<ConvexPolygon> subtract(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (!p.float_box().overlaps(q.float_box())) return {p};
    if (!intersect(p, q)) return {p};
    std::vector<ConvexPolygon> out;
    std::optional<ConvexPolygon> rest = p;
    for (const auto& h : q.edge_half_planes()) {
        if (auto outside = rest->clip(h.complement())) out.push_back(*std::move(outside));
        rest = rest->clip(h);
        if (!rest) break;
    }
    return out;
}

namespace {

// Merges two convex pieces sharing an edge when their union is convex.
std::optional<ConvexPolygon> try_merge(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto& pv = p.vertices();
    const auto& qv = q.vertices();
    for (std::size_t i = 0; i < pv.size(); ++i) {
        const Vec2& a = pv[i];
        const Vec2& b = pv[(i + 1) % pv.size()];
        for (std::size_t j = 0; j < qv.size(); ++j) {
            if (qv[j] != b || qv[(j + 1) % qv.size()] != a) continue;
            std::vector<Vec2> loop;
            for (std::size_t k = 0; k < pv.size(); ++k) loop.push_back(pv[(i + 1 + k) % pv.size()]);
            for (std::size_t k = 2; k < qv.size(); ++k) loop.push_back(qv[(j + k) % qv.size()]);
            return ConvexPolygon::try_from_vertices(std::move(loop));
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<ConvexPolygon> decompose_simple_polygon(std::vector<Vec2> loop) {
    simplify_loop(loop);
    if (loop.size() < 3) throw std::invalid_argument("degenerate polygon");
    int orientation = twice_signed_area(loop).sign();
    if (orientation == 0) throw std::invalid_argument("polygon has zero area");
    if (orientation < 0) std::reverse(loop.begin(), loop.end());

    std::vector<ConvexPolygon> triangles;
    while (loop.size() > 3) {
        const std::size_t n = loop.size();
        bool clipped = false;
        for (std::size_t i = 0; i < n && !clipped; ++i) {
            const Vec2& a = loop[(i + n - 1) % n];
            const Vec2& b = loop[i];
            const Vec2& c = loop[(i + 1) % n];
            if (cross(b - a, c - b).sign() <= 0) continue;
            auto tri = ConvexPolygon::from_vertices({a, b, c});
            bool empty = true;
            for (std::size_t k = 0; k < n && empty; ++k) {
                const Vec2& p = loop[k];
                if (p == a || p == b || p == c) continue;
                empty = !tri.contains(p);
            }
            if (!empty) continue;
            triangles.push_back(std::move(tri));
            loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
            simplify_loop(loop);
            clipped = true;
        }
        if (!clipped) throw std::invalid_argument("polygon is not simple");
    }
    if (loop.size() == 3) triangles.push_back(ConvexPolygon::from_vertices(loop));

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < triangles.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < triangles.size() && !merged; ++j) {
                if (auto m = try_merge(triangles[i], triangles[j])) {
                    triangles[i] = *std::move(m);
                    triangles.erase(triangles.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }
    return triangles;
}

}  // namespace cwset
