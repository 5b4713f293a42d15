#pragma once

#include "cwset/region.hpp"

#include <random>
#include <vector>

namespace cwset::support {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

/// Random a + b sqrt3 with small numerators and denominators.
inline Scalar random_scalar(std::mt19937& rng, bool with_sqrt3 = true) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    Rational a(num(rng), den(rng));
    Rational b = with_sqrt3 ? Rational(num(rng), den(rng)) : Rational(0);
    return Scalar(a, b);
}

inline Scalar random_nonzero(std::mt19937& rng) {
    for (;;) {
        Scalar s = random_scalar(rng);
        if (!s.is_zero()) return s;
    }
}

/// Random convex polygon: hull of a handful of rational points in [-3, 3]^2.
inline ConvexPolygon random_convex(std::mt19937& rng) {
    std::uniform_int_distribution<long> c(-18, 18);
    for (;;) {
        std::vector<Vec2> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({q(c(rng), 6), q(c(rng), 6)});
        try {
            return ConvexPolygon::hull(std::move(pts));
        } catch (const std::invalid_argument&) {
        }
    }
}

inline Region random_region(std::mt19937& rng, int pieces) {
    std::vector<ConvexPolygon> ps;
    for (int i = 0; i < pieces; ++i) ps.push_back(random_convex(rng));
    return Region(std::move(ps));
}

}  // namespace cwset::support
