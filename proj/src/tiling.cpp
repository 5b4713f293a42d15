#include "cwset/tiling.hpp"

#include <map>
#include <stdexcept>

namespace cwset {

namespace {

Scalar integer(const mpz_class& z) { return Scalar(Rational(mpq_class(z))); }

// Peels piece off cell: returns the part of cell inside piece (if it has
// positive area) and the convex parts outside it.
std::pair<std::optional<ConvexPolygon>, std::vector<ConvexPolygon>> split_cell(const ConvexPolygon& cell,
                                                                               const ConvexPolygon& piece) {
    std::vector<ConvexPolygon> outside;
    std::optional<ConvexPolygon> rest = cell;
    for (const auto& h : piece.edge_half_planes()) {
        if (auto out = rest->clip(h.complement())) outside.push_back(*std::move(out));
        rest = rest->clip(h);
        if (!rest) break;
    }
    return {std::move(rest), std::move(outside)};
}

Scalar max_abs_coordinate_sq(const ConvexPolygon& p) {
    Scalar best;
    for (const auto& v : p.vertices()) best = max(best, max(v.x * v.x, v.y * v.y));
    return best;
}

}  // namespace

Scalar TilingReport::defect_area() const {
    Scalar s;
    for (const auto& d : defect_regions) s += d.region.area();
    return s;
}

CoverageArrangement::CoverageArrangement(const Region& domain) : domain_(domain) {
    for (const auto& p : domain.pieces()) cells_.push_back({p, 0});
}

void CoverageArrangement::insert(const ConvexPolygon& piece) {
    std::vector<Cell> next;
    next.reserve(cells_.size() + 8);
    for (auto& cell : cells_) {
        if (!cell.poly.float_box().overlaps(piece.float_box())) {
            next.push_back(std::move(cell));
            continue;
        }
        auto [inside, outside] = split_cell(cell.poly, piece);
        if (!inside) {
            next.push_back(std::move(cell));
            continue;
        }
        next.push_back({*std::move(inside), cell.count + 1});
        for (auto& o : outside) next.push_back({std::move(o), cell.count});
    }
    cells_ = std::move(next);
}

TilingReport CoverageArrangement::report(int k, const Mat2& to_output) const {
    std::map<int, std::vector<ConvexPolygon>> classes;
    for (const auto& c : cells_) classes[c.count].push_back(c.poly);
    TilingReport rep;
    rep.multiplicity_target = k;
    rep.checked_domain = transform(to_output, domain_);
    for (auto& [count, polys] : classes) {
        Region region = transform(to_output, Region(std::move(polys)));
        rep.class_areas.emplace_back(count, region.area());
        if (count != k) rep.defect_regions.push_back({count, std::move(region)});
    }
    rep.passed = rep.defect_regions.empty();
    return rep;
}

Region dilation_fundamental_domain(int d, const std::optional<Sector>& sector, const DilationBox& h) {
    if (d < 2) throw std::invalid_argument("dilation must be at least 2");
    if (h.x0.sign() >= 0 || h.y0.sign() >= 0 || h.x1.sign() <= 0 || h.y1.sign() <= 0)
        throw std::invalid_argument("dilation box must contain the origin in its interior");
    const Scalar s(d);
    auto inner = ConvexPolygon::box(h.x0, h.y0, h.x1, h.y1);
    auto outer = ConvexPolygon::box(s * h.x0, s * h.y0, s * h.x1, s * h.y1);
    Region q(subtract(outer, inner));
    if (sector) q = sector->clip(q);
    return q;
}

TilingReport verify_translation_tiling(const Region& r, const Lattice& lattice, int k) {
    if (k < 1) throw std::invalid_argument("multiplicity must be at least 1");
    const Mat2 to_lattice = lattice.basis().inverse();
    const auto unit = ConvexPolygon::box(0, 0, 1, 1);
    CoverageArrangement arrangement{Region{unit}};
    for (const auto& original : r.pieces()) {
        ConvexPolygon p = original.transformed(to_lattice);
        const mpz_class m0 = floor(p.min_x()), m1 = ceil(p.max_x());
        const mpz_class n0 = floor(p.min_y()), n1 = ceil(p.max_y());
        for (mpz_class m = m0; m < m1; ++m) {
            for (mpz_class n = n0; n < n1; ++n) {
                ConvexPolygon shifted = p.translated({-integer(m), -integer(n)});
                if (auto c = intersect(shifted, unit)) arrangement.insert(*c);
            }
        }
    }
    return arrangement.report(k, lattice.basis());
}

TilingReport verify_dilation_tiling(const Region& u, int d, int k, const std::optional<Sector>& sector,
                                    const DilationBox& h) {
    if (k < 1) throw std::invalid_argument("multiplicity must be at least 1");
    const Vec2 origin{0, 0};
    for (const auto& p : u.pieces())
        if (p.contains_interior(origin)) throw std::invalid_argument("origin is interior to the region");
    if (sector && !sector_contains(*sector, u)) throw std::invalid_argument("region is not contained in the sector");

    Region domain = dilation_fundamental_domain(d, sector, h);

    std::vector<ConvexPolygon> witnesses;
    for (const auto& p : u.pieces())
        if (p.contains(origin)) witnesses.push_back(p);
    if (!witnesses.empty()) {
        TilingReport rep;
        rep.multiplicity_target = k;
        rep.checked_domain = domain;
        rep.defect_regions.push_back({kUnboundedMultiplicity, Region(std::move(witnesses))});
        rep.note = "a piece reaches the origin; its dilates cover a cone infinitely often";
        return rep;
    }

    // Q_d lies in the band h_in <= |z|_inf < d * h_out.
    const Scalar h_in = min(min(-h.x0, -h.y0), min(h.x1, h.y1));
    const Scalar h_out = max(max(-h.x0, -h.y0), max(h.x1, h.y1));
    const Scalar h_in_sq = h_in * h_in, h_out_sq = h_out * h_out;
    const Rational dd(d);

    CoverageArrangement arrangement(domain);
    for (const auto& p : u.pieces()) {
        // d^-j P can meet Q_d only if its far corner leaves H (outer bound)
        // and its nearest point is inside dH (|z|_inf >= |z|_2 / sqrt 2).
        const Scalar dist_sq = distance_to_origin(p);
        const Scalar reach_sq = max_abs_coordinate_sq(p);
        auto near_ok = [&](int j) { return dist_sq < Scalar(Rational(2) * pow(dd, 2 * j + 2)) * h_out_sq; };
        auto far_ok = [&](int j) { return reach_sq > Scalar(pow(dd, 2 * j)) * h_in_sq; };
        int j_lo = 0;
        while (near_ok(j_lo - 1)) --j_lo;
        while (!near_ok(j_lo)) ++j_lo;
        int j_hi = j_lo;
        while (far_ok(j_hi + 1)) ++j_hi;
        for (int j = j_lo; j <= j_hi; ++j) {
            if (!far_ok(j)) continue;
            ConvexPolygon scaled = p.transformed(Mat2::scale(Scalar(pow(dd, -j))));
            for (const auto& q : domain.pieces())
                if (auto c = intersect(scaled, q)) arrangement.insert(*c);
        }
    }
    return arrangement.report(k);
}

TilingReport verify_pairwise_disjoint(std::span<const Region> regions) {
    TilingReport rep;
    rep.multiplicity_target = 1;
    std::vector<ConvexPolygon> overlaps;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        rep.checked_domain = rep.checked_domain.concat(regions[i]);
        for (std::size_t j = i + 1; j < regions.size(); ++j)
            for (const auto& p : regions[i].pieces())
                for (const auto& q : regions[j].pieces())
                    if (auto x = intersect(p, q)) overlaps.push_back(*std::move(x));
    }
    if (!overlaps.empty()) {
        rep.defect_regions.push_back({2, Region(std::move(overlaps))});
        rep.note = "pairwise intersections of positive area";
    }
    rep.passed = rep.defect_regions.empty();
    return rep;
}

bool sector_contains(const Sector& m, const Region& r) {
    if (m.is_whole_plane()) return true;
    for (const auto& p : r.pieces()) {
        Scalar inside;
        for (const auto& part : m.clip(p)) inside += part.area();
        if (inside != p.area()) return false;
    }
    return true;
}

}  // namespace cwset
