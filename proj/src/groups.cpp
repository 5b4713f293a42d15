#include "cwset/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace cwset {

Lattice::Lattice(Vec2 v1, Vec2 v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
    if (cross(v1_, v2_).is_zero()) throw std::invalid_argument("lattice basis is linearly dependent");
    basis_inv_ = basis().inverse();
}

Lattice Lattice::square() { return Lattice({1, 0}, {0, 1}); }

Lattice Lattice::hexagonal() { return Lattice({1, 0}, {Rational(1, 2), Scalar(0, Rational(1, 2))}); }

bool Lattice::contains(const Vec2& p) const {
    Vec2 c = coordinates(p);
    return c.x.is_rational() && c.y.is_rational() && c.x.rational_part().is_integer() &&
           c.y.rational_part().is_integer();
}

Vec2 Lattice::reduce(const Vec2& p) const {
    Vec2 c = coordinates(p);
    Scalar fx = c.x - Scalar(Rational(mpq_class(floor(c.x))));
    Scalar fy = c.y - Scalar(Rational(mpq_class(floor(c.y))));
    return fx * v1_ + fy * v2_;
}

ConvexPolygon Lattice::fundamental_cell() const {
    return ConvexPolygon::from_vertices({{0, 0}, v1_, v1_ + v2_, v2_});
}

Lattice dual_lattice(const Lattice& lattice) {
    // Rows of B^-1 are the dual basis vectors.
    Mat2 inv = lattice.basis().inverse();
    return Lattice({inv.a, inv.b}, {inv.c, inv.d});
}

bool same_lattice(const Lattice& a, const Lattice& b) {
    return a.contains(b.v1()) && a.contains(b.v2()) && b.contains(a.v1()) && b.contains(a.v2());
}

WallpaperGroup::WallpaperGroup(std::string name, Lattice lattice, std::vector<Isometry> generators)
    : name_(std::move(name)), lattice_(std::move(lattice)), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (!g.m.is_orthogonal()) throw std::invalid_argument(name_ + ": generator is not an isometry");
        if (!lattice_.contains(g.m * lattice_.v1()) || !lattice_.contains(g.m * lattice_.v2()))
            throw std::invalid_argument(name_ + ": generator does not preserve the lattice");
    }
    // Breadth-first closure over generator products, translations reduced
    // modulo the lattice. Each matrix part must carry exactly one coset.
    elements_.push_back({Mat2::identity(), Vec2{0, 0}});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t idx = queue.front();
        queue.pop_front();
        Isometry cur{elements_[idx].coset, elements_[idx].matrix};
        for (const auto& gen : generators_) {
            Isometry next = compose(cur, gen);
            Vec2 c = lattice_.reduce(next.t);
            auto it = std::find_if(elements_.begin(), elements_.end(),
                                   [&](const PointGroupElement& e) { return e.matrix == next.m; });
            if (it == elements_.end()) {
                elements_.push_back({next.m, c});
                queue.push_back(elements_.size() - 1);
            } else if (it->coset != c) {
                throw std::logic_error(name_ + ": generators do not define a crystallographic group");
            }
        }
    }
}

std::vector<Mat2> WallpaperGroup::point_group() const {
    std::vector<Mat2> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.matrix);
    return out;
}

std::optional<Vec2> WallpaperGroup::coset(const Mat2& s) const {
    for (const auto& e : elements_)
        if (e.matrix == s) return e.coset;
    return std::nullopt;
}

bool WallpaperGroup::is_symmorphic() const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [](const PointGroupElement& e) { return e.coset == Vec2{0, 0}; });
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

Isometry tau(const Vec2& v) { return Isometry::translation(v); }
Isometry lin(const Mat2& m) { return Isometry::linear(m); }
Isometry glide(const Vec2& t, const Mat2& m) { return {t, m}; }

}  // namespace

const std::vector<std::string>& group_names() {
    static const std::vector<std::string> names{"p1",  "p2",  "pm",  "pg",   "pmm",  "pmg", "pgg", "p4",  "p4m",
                                                "p4g", "cm",  "cmm", "p3",   "p31m", "p3m1", "p6", "p6m"};
    return names;
}

WallpaperGroup build_group(std::string_view name) {
    const std::string n = lower(name);
    const Rational half(1, 2);
    const Vec2 e1{1, 0}, e2{0, 1};
    const Vec2 h2{half, Scalar(0, half)};
    const Mat2 s01 = reflection({0, 1}), s10 = reflection({1, 0}), s11 = reflection({1, 1});

    auto square = [&](std::vector<Isometry> extra) {
        std::vector<Isometry> gens{tau(e1), tau(e2)};
        gens.insert(gens.end(), extra.begin(), extra.end());
        return WallpaperGroup(n, Lattice::square(), std::move(gens));
    };
    auto hex = [&](std::vector<Isometry> extra) {
        std::vector<Isometry> gens{tau(e1), tau(h2)};
        gens.insert(gens.end(), extra.begin(), extra.end());
        return WallpaperGroup(n, Lattice::hexagonal(), std::move(gens));
    };

    if (n == "p1") return square({});
    if (n == "p2") return square({lin(rotation(2))});
    if (n == "pm") return square({lin(s01)});
    if (n == "pg") return square({glide({0, half}, s01)});
    if (n == "pmm") return square({lin(rotation(2)), lin(s01)});
    if (n == "pmg") return square({lin(rotation(2)), glide({0, half}, s01)});
    if (n == "pgg") return square({lin(rotation(2)), glide({half, half}, s01)});
    if (n == "p4") return square({lin(rotation(4))});
    if (n == "p4m") return square({lin(rotation(4)), lin(s11)});
    if (n == "p4g") return square({lin(rotation(4)), glide({half, half}, s11)});
    if (n == "cm") return square({lin(s11)});
    if (n == "cmm") return square({lin(rotation(2)), lin(s11)});
    if (n == "p3") return hex({lin(rotation(3))});
    if (n == "p31m") return hex({lin(rotation(3)), lin(s10)});
    if (n == "p3m1") return hex({lin(rotation(3)), lin(s01)});
    if (n == "p6") return hex({lin(rotation(6))});
    if (n == "p6m") return hex({lin(rotation(6)), lin(reflection({Scalar(0, half), half}))});
    throw std::invalid_argument("unknown wallpaper group '" + std::string(name) + "'");
}

bool member(const WallpaperGroup& g, const Isometry& x) {
    auto c = g.coset(x.m);
    return c && g.lattice().contains(x.t - *c);
}

bool compatible(const WallpaperGroup& g, int d) {
    if (d < 2) throw std::invalid_argument("dilation must be at least 2");
    const Scalar k(d - 1);
    return std::all_of(g.elements().begin(), g.elements().end(),
                       [&](const PointGroupElement& e) { return g.lattice().contains(k * e.coset); });
}

std::vector<Region> orbit(const WallpaperGroup& g, const Region& r) {
    std::vector<Region> out;
    out.reserve(g.order());
    for (const auto& e : g.elements()) out.push_back(transform(e.matrix, r));
    return out;
}

Mat2 transport_matrix(Transport t) {
    switch (t) {
        case Transport::none: return Mat2::identity();
        case Transport::L: return lattice_matrix_L();
        case Transport::L_prime: return lattice_matrix_L_prime();
    }
    return Mat2::identity();
}

std::string to_string(Transport t) {
    switch (t) {
        case Transport::none: return "none";
        case Transport::L: return "L";
        case Transport::L_prime: return "Lp";
    }
    return "none";
}

Transport parse_transport(std::string_view text) {
    std::string t = lower(text);
    if (t == "none" || t.empty()) return Transport::none;
    if (t == "l") return Transport::L;
    if (t == "lp" || t == "l'" || t == "l_prime") return Transport::L_prime;
    throw std::invalid_argument("unknown transport '" + std::string(text) + "' (expected none, L or Lp)");
}

SectorAssignment canonical_sector(std::string_view name) {
    const std::string n = lower(name);
    auto plain = [](Sector s) { return SectorAssignment{s, Transport::none, s}; };
    auto moved = [](Sector s, Transport t) { return SectorAssignment{s, t, s.transformed(transport_matrix(t))}; };

    if (n == "p1") return plain(Sector::whole_plane());
    if (n == "p2" || n == "pm" || n == "pg") return plain(Sector::right_half_plane());
    if (n == "cm") return plain(Sector::cone({-1, -1}, {1, 1}));
    if (n == "pmm" || n == "pmg" || n == "pgg" || n == "p4") return plain(Sector::first_quadrant());
    if (n == "cmm") return plain(Sector::cone({1, -1}, {1, 1}));
    if (n == "p4m" || n == "p4g") return plain(Sector::first_octant());
    if (n == "p3") return moved(Sector::first_quadrant(), Transport::L_prime);
    if (n == "p6") return moved(Sector::first_quadrant(), Transport::L);
    if (n == "p6m") return moved(Sector::first_octant(), Transport::L);
    if (n == "p31m") return moved(Sector::first_octant(), Transport::L_prime);
    if (n == "p3m1") return moved(Sector::first_and_fifth_octants(), Transport::L);
    throw std::invalid_argument("unknown wallpaper group '" + std::string(name) + "'");
}

}  // namespace cwset
