#include "cwset/catalog.hpp"
#include "cwset/fourier.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace cwset;
using cwset::support::q;

namespace {

// Independent oracle for an axis-aligned box: product of 1-D transforms.
Complex box_oracle(double x0, double y0, double x1, double y1, double u, double v) {
    auto one = [](double a, double b, double w) -> Complex {
        if (w == 0) return b - a;
        const double pi = std::numbers::pi;
        return (std::polar(1.0, -2 * pi * w * b) - std::polar(1.0, -2 * pi * w * a)) / Complex(0, -2 * pi * w);
    };
    return one(x0, x1, u) * one(y0, y1, v);
}

}  // namespace

TEST(Fourier, ZeroFrequencyIsArea) {
    for (const auto& key : catalog::keys()) {
        auto r = catalog::build(key).region;
        EXPECT_NEAR(std::abs(ft_indicator(r, 0, 0) - r.area().to_double()), 0, 1e-12) << key;
    }
}

TEST(Fourier, Examples) {
    Region a = catalog::build("A").region;
    EXPECT_LT(std::abs(ft_indicator(a, 1, 1)), 1e-12);
    Region unit{ConvexPolygon::box(0, 0, 1, 1)};
    for (int k = -5; k <= 5; ++k)
        for (int l = -5; l <= 5; ++l)
            if (k || l) EXPECT_LT(std::abs(ft_indicator(unit, k, l)), 1e-12) << k << "," << l;
}

TEST(Fourier, MatchesBoxOracle) {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> f(-6, 6);
    Region box{ConvexPolygon::box(q(-1, 3), q(1, 5), q(2, 3), q(7, 5))};
    for (int i = 0; i < 200; ++i) {
        double u = f(rng), v = f(rng);
        if (i % 10 == 0) v = 0;
        Complex expected = box_oracle(-1.0 / 3, 1.0 / 5, 2.0 / 3, 7.0 / 5, u, v);
        EXPECT_LT(std::abs(ft_indicator(box, u, v) - expected), 1e-12);
    }
    EXPECT_LT(std::abs(ft_indicator(box, 1e-14, 2e-14) - box_oracle(-1.0 / 3, 0.2, 2.0 / 3, 1.4, 1e-14, 2e-14)), 1e-12);
}

TEST(Fourier, ClosedFormAgreesWithEdgeSum) {
    Region a = catalog::build("A").region;
    Region half = dilate(q(1, 2), a);
    for (long k = -10; k <= 10; ++k) {
        for (long l = -10; l <= 10; ++l) {
            if (k == 0 && l == 0) continue;
            EXPECT_LT(std::abs(closed_form_A_hat(k, l) - ft_indicator(a, k, l)), 1e-10) << k << "," << l;
            EXPECT_LT(std::abs(closed_form_halfA_hat(k, l) - ft_indicator(half, k, l)), 1e-10) << k << "," << l;
        }
    }
    EXPECT_THROW(closed_form_A_hat(0, 0), std::invalid_argument);
    EXPECT_THROW(closed_form_halfA_hat(0, 0), std::invalid_argument);
}

TEST(Fourier, ClosedFormValues) {
    EXPECT_LT(std::abs(closed_form_A_hat(1, 1)), 1e-12);
    EXPECT_LT(std::abs(closed_form_A_hat(1, 2) - closed_form_halfA_hat(1, 2)), 1e-12);
    // A minus A/2 vanishes at every nonzero integer point.
    for (long k = -10; k <= 10; ++k)
        for (long l = -10; l <= 10; ++l)
            if (k || l) EXPECT_LT(std::abs(closed_form_A_hat(k, l) - closed_form_halfA_hat(k, l)), 1e-12);
}

TEST(Fourier, TilingCheckExamples) {
    auto w = fourier_tiling_check(catalog::build("W_p4").region, Lattice::square(), 20, 1e-9);
    EXPECT_TRUE(w.passed);
    EXPECT_GT(w.points_checked, 1000);
    EXPECT_TRUE(fourier_tiling_check(catalog::build("W_p3m1").region, Lattice::hexagonal(), 20, 1e-9).passed);
    auto small = fourier_tiling_check(Region{ConvexPolygon::box(0, 0, q(1, 2), q(1, 2))}, Lattice::square(), 20, 1e-9);
    EXPECT_FALSE(small.passed);
    EXPECT_NEAR(small.value_at_zero_error, 0.75, 1e-12);
    EXPECT_TRUE(fourier_tiling_check(catalog::build("C").region, Lattice::square(), 20, 1e-9, 2).passed);
}

TEST(Fourier, PointCountMatchesLatticeEnumeration) {
    // Integer points with 0 < |(k, l)| <= 5.
    long expected = 0;
    for (int k = -5; k <= 5; ++k)
        for (int l = -5; l <= 5; ++l)
            if ((k || l) && k * k + l * l <= 25) ++expected;
    EXPECT_EQ(fourier_tiling_check(Region{ConvexPolygon::box(0, 0, 1, 1)}, Lattice::square(), 5, 1e-9).points_checked,
              expected);
}

TEST(FourierProperty, ConjugateSymmetryAndTranslationCovariance) {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> f(-8, 8);
    for (int i = 0; i < 30; ++i) {
        Region r = support::random_region(rng, 2);
        Region moved = translate({q(7, 3), q(-5, 4)}, r);
        double u = f(rng), v = f(rng);
        Complex z = ft_indicator(r, u, v);
        EXPECT_LT(std::abs(ft_indicator(r, -u, -v) - std::conj(z)), 1e-12);
        EXPECT_NEAR(std::abs(ft_indicator(moved, u, v)), std::abs(z), 1e-12);
    }
}
