#include "cwset/sector.hpp"

#include <sstream>
#include <stdexcept>

namespace cwset {

std::vector<HalfPlane> Cone::half_planes() const {
    const Vec2 origin{0, 0};
    int turn = cross(from, to).sign();
    if (turn == 0) return {HalfPlane::left_of(origin, from)};  // half plane
    return {HalfPlane::left_of(origin, from), HalfPlane::left_of(origin, -to)};
}

Sector Sector::whole_plane() {
    Sector s;
    s.whole_ = true;
    return s;
}

Sector Sector::from_cones(std::vector<Cone> cones) {
    for (const auto& c : cones) {
        if (norm2(c.from).is_zero() || norm2(c.to).is_zero())
            throw std::invalid_argument("cone direction must be nonzero");
        int turn = cross(c.from, c.to).sign();
        if (turn < 0 || (turn == 0 && dot(c.from, c.to).sign() >= 0))
            throw std::invalid_argument("cone opening angle must lie in (0, pi]");
    }
    Sector s;
    s.cones_ = std::move(cones);
    return s;
}

Sector Sector::right_half_plane() { return cone({0, -1}, {0, 1}); }
Sector Sector::first_quadrant() { return cone({1, 0}, {0, 1}); }
Sector Sector::first_octant() { return cone({1, 0}, {1, 1}); }
Sector Sector::first_and_fifth_octants() {
    return from_cones({{{1, 0}, {1, 1}}, {{-1, 0}, {-1, -1}}});
}

std::vector<ConvexPolygon> Sector::clip(const ConvexPolygon& p) const {
    if (whole_) return {p};
    std::vector<ConvexPolygon> out;
    for (const auto& c : cones_) {
        std::optional<ConvexPolygon> cur = p;
        for (const auto& h : c.half_planes()) {
            cur = cur->clip(h);
            if (!cur) break;
        }
        if (cur) out.push_back(*std::move(cur));
    }
    return out;
}

Region Sector::clip(const Region& r) const {
    std::vector<ConvexPolygon> out;
    for (const auto& p : r.pieces()) {
        auto parts = clip(p);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    return Region(std::move(out));
}

Sector Sector::transformed(const Mat2& m) const {
    if (whole_) return *this;
    if (m.det().is_zero()) throw DivisionByZero("singular transform");
    std::vector<Cone> out;
    for (const auto& c : cones_) {
        if (m.det().sign() > 0)
            out.push_back({m * c.from, m * c.to});
        else
            out.push_back({m * c.to, m * c.from});
    }
    return from_cones(std::move(out));
}

std::string Sector::describe() const {
    if (whole_) return "whole plane";
    std::ostringstream os;
    for (std::size_t i = 0; i < cones_.size(); ++i) {
        if (i) os << " + ";
        os << "cone[" << cones_[i].from << " -> " << cones_[i].to << "]";
    }
    return os.str();
}

}  // namespace cwset
