#include "cwset/catalog.hpp"
#include "cwset/wavelet.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cwset;
using cwset::support::q;

namespace {

Region cat(const char* key) { return catalog::build(key).region; }

}  // namespace

TEST(WaveletSet, Examples) {
    EXPECT_TRUE(verify_wavelet_set(build_group("p4"), cat("W_pmm"), 2).passed);
    auto neg = verify_wavelet_set(build_group("p3"), transform(lattice_matrix_L_prime(), cat("W_pmm")), 2);
    EXPECT_FALSE(neg.passed);
    EXPECT_TRUE(neg.condition_i.passed);
    EXPECT_FALSE(neg.condition_ii.passed);
    EXPECT_TRUE(verify_wavelet_set(build_group("p6"), transform(lattice_matrix_L(), cat("W_pmm")), 2).passed);
}

TEST(WaveletSet, VerdictIsConjunction) {
    auto v = verify_wavelet_set(build_group("p1"), Region{ConvexPolygon::box(0, 0, 1, 1)}, 2);
    EXPECT_TRUE(v.condition_i.passed);
    EXPECT_TRUE(v.condition_ii.passed);
    EXPECT_FALSE(v.condition_iii.passed);
    EXPECT_FALSE(v.passed);
    EXPECT_THROW(verify_wavelet_set(build_group("p1"), cat("W_pm"), 1), std::invalid_argument);
}

TEST(WaveletSet, OriginInteriorIsReportedNotThrown) {
    auto v = verify_wavelet_set(build_group("p1"), Region{ConvexPolygon::box(q(-1, 2), q(-1, 2), q(1, 2), q(1, 2))}, 2);
    EXPECT_TRUE(v.condition_i.passed);
    EXPECT_FALSE(v.condition_iii.passed);
    EXPECT_FALSE(v.passed);
}

TEST(MultiwaveletSet, Examples) {
    auto p1 = build_group("p1");
    std::vector<Region> diamond{cat("W_pm"), transform(reflection({0, 1}), cat("W_pm"))};
    EXPECT_TRUE(verify_multiwavelet_set(p1, diamond, 2).passed);
    std::vector<Region> right{cat("W_cm"), transform(reflection({1, 1}), cat("W_cm"))};
    EXPECT_TRUE(verify_multiwavelet_set(p1, right, 2).passed);
    std::vector<Region> dup{cat("W_pm"), cat("W_pm")};
    auto v = verify_multiwavelet_set(p1, dup, 2);
    EXPECT_FALSE(v.passed);
    EXPECT_FALSE(v.condition_ii.passed);
}

TEST(SubspaceWaveletSet, Examples) {
    EXPECT_TRUE(verify_subspace_wavelet_set(cat("W_p4"), Sector::first_quadrant(), Lattice::square(), 2).passed);
    EXPECT_TRUE(verify_subspace_wavelet_set(cat("C"), Sector::first_quadrant(), Lattice::square(), 2, 2).passed);
    EXPECT_FALSE(verify_subspace_wavelet_set(cat("C"), Sector::first_quadrant(), Lattice::square(), 2, 1).passed);
    EXPECT_TRUE(
        verify_subspace_wavelet_set(cat("D"), Sector::first_and_fifth_octants(), Lattice::square(), 2).passed);
    auto out = verify_subspace_wavelet_set(cat("W_p4"), Sector::first_octant(), Lattice::square(), 2);
    EXPECT_FALSE(out.passed);
    EXPECT_FALSE(out.condition_ii.passed);
}

TEST(GlideEquivalence, Examples) {
    EXPECT_TRUE(glide_equivalence_check(build_group("pm"), build_group("pg"), cat("W_pm"), 2));
    EXPECT_TRUE(verify_wavelet_set(build_group("pg"), cat("W_pm"), 2).passed);
    EXPECT_TRUE(glide_equivalence_check(build_group("p4m"), build_group("p4g"), cat("W_p4m"), 2));
    EXPECT_TRUE(verify_wavelet_set(build_group("p4g"), cat("W_p4m"), 2).passed);
    EXPECT_TRUE(glide_equivalence_check(build_group("pmm"), build_group("pgg"), Region{}, 2));
    EXPECT_FALSE(verify_wavelet_set(build_group("pgg"), Region{}, 2).passed);
    EXPECT_THROW(glide_equivalence_check(build_group("pm"), build_group("p2"), cat("W_pm"), 2), std::invalid_argument);
    EXPECT_THROW(glide_equivalence_check(build_group("p6"), build_group("p4"), cat("W_pm"), 2), std::invalid_argument);
}

TEST(WaveletProperty, ConditionOneInvariantUnderLatticeMoves) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> k(-2, 2);
    for (const auto& c : catalog::all_claims()) {
        if (c.kind != catalog::ClaimKind::single || !c.expected_pass) continue;
        auto g = build_group(c.group);
        const Region w = catalog::claim_region(c);
        std::vector<ConvexPolygon> moved;
        for (const auto& p : w.pieces())
            moved.push_back(p.translated(Scalar(k(rng)) * g.lattice().v1() + Scalar(k(rng)) * g.lattice().v2()));
        EXPECT_TRUE(verify_wavelet_set(g, Region(moved), c.dilation).condition_i.passed) << c.label();
    }
}

TEST(WaveletProperty, InvariantUnderRedecomposition) {
    // Splitting every piece along a line through its centroid must not change the verdict.
    for (const auto& key : {"W_pm", "W_pmm", "W_p4m"}) {
        Region w = cat(key);
        std::vector<ConvexPolygon> split;
        for (const auto& p : w.pieces()) {
            Vec2 c{0, 0};
            for (const auto& v : p.vertices()) c = c + v;
            c = Scalar(Rational(1, static_cast<long>(p.size()))) * c;
            HalfPlane h = HalfPlane::left_of(c, {1, 2});
            for (const auto& half : {h, h.complement()})
                if (auto part = p.clip(half)) split.push_back(*part);
        }
        Region r(split);
        EXPECT_GT(r.size(), w.size());
        for (const auto& g : catalog::build(key).claimed_groups)
            EXPECT_TRUE(verify_wavelet_set(build_group(g), r, 2).passed) << key << " " << g;
    }
}

TEST(WaveletProperty, PassingSetsHaveCovolumeArea) {
    for (const auto& c : catalog::all_claims()) {
        if (c.kind != catalog::ClaimKind::single || !c.expected_pass) continue;
        auto g = build_group(c.group);
        Region w = catalog::claim_region(c);
        ASSERT_TRUE(verify_wavelet_set(g, w, c.dilation).passed) << c.label();
        EXPECT_EQ(w.area(), g.lattice().covolume()) << c.label();
        Scalar total;
        for (const auto& im : orbit(g, w)) total += im.area();
        EXPECT_EQ(total, Scalar(static_cast<long>(g.order())) * g.lattice().covolume()) << c.label();
    }
}

TEST(WaveletProperty, LatticeTransport) {
    Region w = cat("W_p4");
    ASSERT_TRUE(verify_subspace_wavelet_set(w, Sector::first_quadrant(), Lattice::square(), 2).passed);
    Region lw = transform(lattice_matrix_L(), w);
    EXPECT_TRUE(verify_translation_tiling(lw, Lattice::hexagonal(), 1).passed);
    Sector sixty = Sector::first_quadrant().transformed(lattice_matrix_L());
    EXPECT_TRUE(verify_dilation_tiling(lw, 2, 1, sixty).passed);
    EXPECT_TRUE(verify_subspace_wavelet_set(lw, sixty, Lattice::hexagonal(), 2).passed);
}
