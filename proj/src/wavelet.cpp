#include "cwset/wavelet.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwset {

namespace {

// Union of the images for condition (iii). When the images are already known
// to be interior-disjoint, concatenation is the union up to measure zero.
Region images_union(std::span<const Region> images, bool disjoint) {
    Region u;
    for (const auto& r : images) u = u.concat(r);
    return disjoint ? u : u.normalized();
}

TilingReport merge(std::vector<TilingReport> reports, int k) {
    TilingReport out;
    out.multiplicity_target = k;
    out.passed = true;
    for (auto& r : reports) {
        out.passed = out.passed && r.passed;
        out.checked_domain = out.checked_domain.concat(r.checked_domain);
        for (auto& d : r.defect_regions) out.defect_regions.push_back(std::move(d));
        for (auto& c : r.class_areas) out.class_areas.push_back(std::move(c));
        if (!r.note.empty()) out.note += (out.note.empty() ? "" : "; ") + r.note;
    }
    return out;
}

TilingReport dilation_condition(const Region& u, int d, const std::optional<Sector>& sector) {
    try {
        return verify_dilation_tiling(u, d, 1, sector);
    } catch (const std::invalid_argument& e) {
        // The origin inside the union: infinitely many dilates overlap there.
        TilingReport rep;
        rep.note = e.what();
        rep.defect_regions.push_back({kUnboundedMultiplicity, u});
        return rep;
    }
}

}  // namespace

WaveletVerdict verify_wavelet_set(const WallpaperGroup& g, const Region& w, int d) {
    return verify_multiwavelet_set(g, std::span<const Region>(&w, 1), d);
}

WaveletVerdict verify_multiwavelet_set(const WallpaperGroup& g, std::span<const Region> sets, int d) {
    if (d < 2) throw std::invalid_argument("dilation must be at least 2");
    WaveletVerdict v;
    std::vector<TilingReport> per_set;
    std::vector<Region> images;
    for (const auto& w : sets) {
        per_set.push_back(verify_translation_tiling(w, g.lattice(), 1));
        auto o = orbit(g, w);
        images.insert(images.end(), o.begin(), o.end());
    }
    v.condition_i = merge(std::move(per_set), 1);
    v.condition_ii = verify_pairwise_disjoint(images);
    v.condition_iii = dilation_condition(images_union(images, v.condition_ii.passed), d, std::nullopt);
    v.passed = v.condition_i.passed && v.condition_ii.passed && v.condition_iii.passed;
    return v;
}

WaveletVerdict verify_subspace_wavelet_set(const Region& w, const Sector& m, const Lattice& lattice, int d, int k) {
    if (d < 2) throw std::invalid_argument("dilation must be at least 2");
    WaveletVerdict v;
    v.condition_i = verify_translation_tiling(w, lattice, k);

    TilingReport inside;
    inside.passed = sector_contains(m, w);
    if (!inside.passed) {
        inside.defect_regions.push_back({0, subtract(w, m.clip(w))});
        inside.note = "region leaves the sector " + m.describe();
    }
    inside.checked_domain = w;
    v.condition_ii = std::move(inside);

    if (v.condition_ii.passed) {
        v.condition_iii = dilation_condition(w, d, m);
    } else {
        v.condition_iii = dilation_condition(m.clip(w), d, m);
        v.condition_iii.passed = false;
        v.condition_iii.note = "dilation checked on the part inside the sector only";
    }
    v.passed = v.condition_i.passed && v.condition_ii.passed && v.condition_iii.passed;
    return v;
}

bool glide_equivalence_check(const WallpaperGroup& g1, const WallpaperGroup& g2, const Region& w, int d) {
    if (!same_lattice(g1.lattice(), g2.lattice())) throw std::invalid_argument("groups have different lattices");
    auto p1 = g1.point_group(), p2 = g2.point_group();
    bool same_points = p1.size() == p2.size() && std::all_of(p1.begin(), p1.end(), [&](const Mat2& s) {
                           return std::find(p2.begin(), p2.end(), s) != p2.end();
                       });
    if (!same_points) throw std::invalid_argument("groups have different point groups");
    return verify_wavelet_set(g1, w, d).passed == verify_wavelet_set(g2, w, d).passed;
}

}  // namespace cwset
