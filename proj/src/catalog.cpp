#include "cwset/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwset::catalog {

namespace {

Scalar q(long n, long d = 1) { return Rational(n, d); }
Vec2 pt(const Scalar& x, const Scalar& y) { return {x, y}; }
ConvexPolygon conv(std::vector<Vec2> points) { return ConvexPolygon::hull(std::move(points)); }

Region square_union(const std::vector<std::pair<Scalar, Scalar>>& spans) {
    std::vector<ConvexPolygon> pieces;
    for (const auto& [lo, hi] : spans) pieces.push_back(ConvexPolygon::box(lo, lo, hi, hi));
    return Region(std::move(pieces));
}

Region region_W_pm() {
    return {conv({pt(0, q(1, 3)), pt(0, q(2, 3)), pt(2, 0), pt(1, 0)}),
            conv({pt(1, 0), pt(2, 0), pt(q(1, 2), q(-1, 2)), pt(0, q(-1, 3))}),
            conv({pt(0, q(-1, 3)), pt(0, q(-2, 3)), pt(q(-1, 2), q(-1, 2))})};
}

Region region_W_p2() {
    const Region pm = region_W_pm();
    const auto& p = pm.pieces();
    return {p[0], p[1], p[2].translated({0, 1})};
}

Region region_W_cm() {
    std::vector<ConvexPolygon> pieces{conv({pt(q(2, 3), q(2, 3)), pt(q(2, 3), q(4, 3)), pt(q(4, 3), q(4, 3))}),
                                      conv({pt(q(-2, 3), q(-2, 3)), pt(q(-2, 3), q(-4, 3)), pt(q(-4, 3), q(-4, 3))})};
    // The third piece is L-shaped, so it is stored as a convex decomposition.
    auto l_shape = decompose_simple_polygon({pt(q(-1, 3), q(-1, 3)), pt(q(-1, 3), q(-2, 3)), pt(q(2, 3), q(-2, 3)),
                                             pt(q(2, 3), q(1, 3)), pt(q(1, 3), q(1, 3)), pt(q(1, 3), q(-1, 3))});
    pieces.insert(pieces.end(), l_shape.begin(), l_shape.end());
    return Region(std::move(pieces));
}

Region region_W_pmm() {
    return {conv({pt(0, q(2, 3)), pt(0, 1), pt(q(1, 2), 1), pt(2, 0), pt(1, 0)}),
            conv({pt(q(-1, 2), -1), pt(0, -1), pt(0, q(-4, 3))})};
}

Region region_A() { return square_union({{0, q(2, 3)}, {q(2, 3), q(4, 3)}, {q(4, 3), 2}}); }

Region region_W_p4() {
    Region a = region_A();
    return subtract(a, dilate(q(1, 2), a));
}

// Parts of r whose integer translates land in the given cells of the unit square.
Region split_by_wrap(const Region& r, const std::vector<ConvexPolygon>& cells) {
    std::vector<ConvexPolygon> out;
    for (const auto& p : r.pieces()) {
        const mpz_class m0 = floor(p.min_x()), m1 = ceil(p.max_x());
        const mpz_class n0 = floor(p.min_y()), n1 = ceil(p.max_y());
        for (mpz_class m = m0; m < m1; ++m) {
            for (mpz_class n = n0; n < n1; ++n) {
                Vec2 shift{Rational(mpq_class(m)), Rational(mpq_class(n))};
                ConvexPolygon moved = p.translated(-shift);
                for (const auto& c : cells)
                    if (auto x = intersect(moved, c)) out.push_back(x->translated(shift));
            }
        }
    }
    return Region(std::move(out));
}

std::vector<ConvexPolygon> quarter_triangles_upper_lower() {
    const Vec2 centre{q(1, 2), q(1, 2)};
    return {ConvexPolygon::from_vertices({pt(0, 1), centre, pt(1, 1)}),
            ConvexPolygon::from_vertices({pt(0, 0), pt(1, 0), centre})};
}

std::vector<ConvexPolygon> quarter_triangles_left_right() {
    const Vec2 centre{q(1, 2), q(1, 2)};
    return {ConvexPolygon::from_vertices({pt(0, 0), centre, pt(0, 1)}),
            ConvexPolygon::from_vertices({pt(1, 0), pt(1, 1), centre})};
}

Region region_W_p4_a() { return split_by_wrap(region_W_p4(), quarter_triangles_upper_lower()); }
Region region_W_p4_b() { return split_by_wrap(region_W_p4(), quarter_triangles_left_right()); }

Region region_W_cmm() { return region_W_p4_a().concat(transform(reflection({1, 0}), region_W_p4_b())); }

Region region_C() {
    Region a = region_A();
    Region aa = a.concat(translate({2, 2}, a));
    return subtract(aa, dilate(q(1, 2), aa));
}

Region region_W_p4m() {
    return {conv({pt(0, q(1, 3)), pt(0, q(2, 3)), pt(q(1, 3), q(2, 3)), pt(q(1, 3), q(1, 3))}),
            conv({pt(1, q(2, 3)), pt(1, 1), pt(q(4, 3), 1), pt(q(4, 3), q(2, 3))}),
            conv({pt(q(4, 3), 2), pt(q(5, 3), 2), pt(q(5, 3), q(5, 3)), pt(q(4, 3), q(5, 3))}),
            conv({pt(2, 2), pt(q(8, 3), 2), pt(q(8, 3), q(8, 3))}),
            conv({pt(q(8, 3), q(8, 3)), pt(q(8, 3), q(10, 3)), pt(q(10, 3), q(10, 3))}),
            conv({pt(q(10, 3), q(10, 3)), pt(q(10, 3), q(11, 3)), pt(q(11, 3), q(11, 3))}),
            conv({pt(q(11, 3), q(11, 3)), pt(4, 4), pt(4, q(10, 3)), pt(q(11, 3), q(10, 3))})};
}

Region region_D() {
    Region lower = Sector::first_octant().clip(region_W_p4());
    return lower.concat(transform(rotation(2), lower));
}

Region region_fig2_diamond() { return region_W_pm().concat(transform(reflection({0, 1}), region_W_pm())); }
Region region_fig2_right() { return region_W_cm().concat(transform(reflection({1, 1}), region_W_cm())); }

CatalogEntry entry(std::string key, Region region, std::vector<std::string> groups, std::string note,
                   LatticeKind lattice = LatticeKind::square, int multiplicity = 1) {
    CatalogEntry e;
    e.key = std::move(key);
    e.region = std::move(region);
    e.claimed_groups = std::move(groups);
    e.construction_note = std::move(note);
    e.lattice = lattice;
    e.translation_multiplicity = multiplicity;
    return e;
}

}  // namespace

const std::vector<std::string>& keys() {
    static const std::vector<std::string> k{"W_pm",  "W_p2", "W_cm",   "W_pmm",  "A",    "W_p4",
                                            "W_p4_a", "W_p4_b", "W_cmm", "W_p3",  "W_p6", "C",
                                            "W_p4m", "W_p6m", "D",      "W_p3m1", "fig2_diamond",
                                            "fig2_right", "rhombic4"};
    return k;
}

CatalogEntry build(std::string_view key) {
    const Mat2 L = lattice_matrix_L(), Lp = lattice_matrix_L_prime();
    if (key == "W_pm")
        return entry("W_pm", region_W_pm(), {"pm", "pg"},
                     "diamond annulus halved so one half is the mirror image of the other");
    if (key == "W_p2")
        return entry("W_p2", region_W_p2(), {"p2"}, "W_pm with its lower-left triangle translated by (0, 1)");
    if (key == "W_cm")
        return entry("W_cm", region_W_cm(), {"cm"},
                     "two triangles plus an L-shaped piece stored as convex parts");
    if (key == "W_pmm")
        return entry("W_pmm", region_W_pmm(), {"pmm", "pmg", "pgg", "p4"},
                     "one quarter of the rhombic annulus");
    if (key == "A")
        return entry("A", region_A(), {}, "three squares of side 2/3 along the diagonal", LatticeKind::square, 0);
    if (key == "W_p4")
        return entry("W_p4", region_W_p4(), {"pmm", "pmg", "pgg", "p4"},
                     "A minus A/2, a first-quadrant subspace wavelet set");
    if (key == "W_p4_a")
        return entry("W_p4_a", region_W_p4_a(), {}, "part of W_p4 wrapping onto the upper and lower quarter triangles",
                     LatticeKind::square, 0);
    if (key == "W_p4_b")
        return entry("W_p4_b", region_W_p4_b(), {}, "part of W_p4 wrapping onto the left and right quarter triangles",
                     LatticeKind::square, 0);
    if (key == "W_cmm")
        return entry("W_cmm", region_W_cmm(), {"cmm"}, "W_p4_a together with W_p4_b reflected in the x-axis");
    if (key == "W_p3")
        return entry("W_p3", transform(Lp, region_W_p4()), {"p3"}, "L' applied to W_p4", LatticeKind::hexagonal);
    if (key == "W_p6")
        return entry("W_p6", transform(L, region_W_pmm()), {"p6"}, "L applied to W_pmm", LatticeKind::hexagonal);
    if (key == "C")
        return entry("C", region_C(), {}, "(A + tau_(2,2) A) minus its half; two-fold first-quadrant tile",
                     LatticeKind::square, 2);
    if (key == "W_p4m")
        return entry("W_p4m", region_W_p4m(), {"p4m", "p4g"}, "seven pieces; with its diagonal mirror image it forms C");
    if (key == "W_p6m")
        return entry("W_p6m", transform(L, region_W_p4m()), {"p6m"}, "L applied to W_p4m", LatticeKind::hexagonal);
    if (key == "D")
        return entry("D", region_D(), {}, "first-octant part of W_p4 plus its rotation by pi");
    if (key == "W_p3m1")
        return entry("W_p3m1", transform(L, region_D()), {"p3m1", "p31m"}, "L applied to D", LatticeKind::hexagonal);
    if (key == "fig2_diamond")
        return entry("fig2_diamond", region_fig2_diamond(), {"p1"}, "W_pm with its mirror image in the y-axis",
                     LatticeKind::square, 2);
    if (key == "fig2_right")
        return entry("fig2_right", region_fig2_right(), {"p1"}, "W_cm with its mirror image in the diagonal",
                     LatticeKind::square, 2);
    if (key == "rhombic4")
        return entry("rhombic4", transform(Mat2::diagonal(1, 2), region_fig2_diamond()), {"p1"},
                     "diamond annulus stretched by diag(1, 2)", LatticeKind::square, 4);
    throw std::invalid_argument("unknown catalog key '" + std::string(key) + "'");
}

const std::vector<std::string>& multiset_keys() {
    static const std::vector<std::string> k{"fig2_diamond_split", "fig2_right_split", "rhombic4_split"};
    return k;
}

std::vector<Region> build_multiset(std::string_view key) {
    if (key == "fig2_diamond_split") return {region_W_pm(), transform(reflection({0, 1}), region_W_pm())};
    if (key == "fig2_right_split") return {region_W_cm(), transform(reflection({1, 1}), region_W_cm())};
    if (key == "rhombic4_split") return orbit(build_group("pmm"), region_W_pmm());
    throw std::invalid_argument("unknown multiset key '" + std::string(key) + "'");
}

std::string Claim::label() const {
    std::string s;
    switch (kind) {
        case ClaimKind::single: s = group + " " + key; break;
        case ClaimKind::multi: s = group + " multi " + key; break;
        case ClaimKind::subspace: s = "subspace " + key + " in " + sector; break;
    }
    if (transport != Transport::none) s += " transport " + to_string(transport);
    s += " d=" + std::to_string(dilation);
    if (kind == ClaimKind::subspace && multiplicity != 1) s += " k=" + std::to_string(multiplicity);
    if (!expected_pass) s += " (expected to fail)";
    return s;
}

std::vector<Claim> all_claims() {
    std::vector<Claim> out;
    auto single = [&](std::string g, std::string k) {
        Claim c;
        c.group = std::move(g);
        c.key = std::move(k);
        out.push_back(std::move(c));
    };
    for (const char* g : {"pm", "pg"}) single(g, "W_pm");
    single("p2", "W_p2");
    single("cm", "W_cm");
    for (const char* g : {"pmm", "pmg", "pgg", "p4"}) single(g, "W_pmm");
    for (const char* g : {"pmm", "pmg", "pgg", "p4"}) single(g, "W_p4");
    single("cmm", "W_cmm");
    for (const char* g : {"p4m", "p4g"}) single(g, "W_p4m");
    single("p3", "W_p3");
    single("p6", "W_p6");
    single("p6m", "W_p6m");
    for (const char* g : {"p3m1", "p31m"}) single(g, "W_p3m1");

    for (const auto& k : multiset_keys()) {
        Claim c;
        c.kind = ClaimKind::multi;
        c.group = "p1";
        c.key = k;
        out.push_back(std::move(c));
    }

    auto subspace = [&](std::string k, std::string sector, int multiplicity) {
        Claim c;
        c.kind = ClaimKind::subspace;
        c.key = std::move(k);
        c.sector = std::move(sector);
        c.multiplicity = multiplicity;
        out.push_back(std::move(c));
    };
    subspace("W_p4", "first_quadrant", 1);
    subspace("C", "first_quadrant", 2);
    subspace("D", "first_fifth_octants", 1);

    Claim negative;
    negative.group = "p3";
    negative.key = "W_pmm";
    negative.transport = Transport::L_prime;
    negative.expected_pass = false;
    out.push_back(std::move(negative));
    return out;
}

Region claim_region(const Claim& c) {
    Region r = build(c.key).region;
    return c.transport == Transport::none ? r : transform(transport_matrix(c.transport), r);
}

Sector sector_by_name(std::string_view name) {
    if (name == "whole") return Sector::whole_plane();
    if (name == "right_half") return Sector::right_half_plane();
    if (name == "first_quadrant") return Sector::first_quadrant();
    if (name == "first_octant") return Sector::first_octant();
    if (name == "first_fifth_octants") return Sector::first_and_fifth_octants();
    return canonical_sector(name).sector;
}

}  // namespace cwset::catalog
