#include "cwset/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cwset {

namespace {

constexpr double pi = std::numbers::pi;

double sinc(double u) {
    if (std::abs(u) < 1e-12) return 1 - (pi * u) * (pi * u) / 6;
    return std::sin(pi * u) / (pi * u);
}

struct FloatPolygon {
    std::vector<std::pair<double, double>> v;
};

Complex ft_polygon(const FloatPolygon& p, double xx, double xy) {
    const double n2 = xx * xx + xy * xy;
    const std::size_t n = p.v.size();
    if (n2 < 1e-24) {
        // First-order expansion: area - 2 pi i <first moment, xi>.
        double area = 0, mx = 0, my = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto [ax, ay] = p.v[i];
            auto [bx, by] = p.v[(i + 1) % n];
            const double c = ax * by - bx * ay;
            area += c / 2;
            mx += (ax + bx) * c / 6;
            my += (ay + by) * c / 6;
        }
        return Complex(area, -2 * pi * (mx * xx + my * xy));
    }
    Complex sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto [ax, ay] = p.v[i];
        auto [bx, by] = p.v[(i + 1) % n];
        const double ex = bx - ax, ey = by - ay;
        const double mx = (ax + bx) / 2, my = (ay + by) / 2;
        const double cross = xx * ey - xy * ex;
        sum += cross * std::polar(1.0, -2 * pi * (mx * xx + my * xy)) * sinc(ex * xx + ey * xy);
    }
    return Complex(0, 1) / (2 * pi * n2) * sum;
}

std::vector<FloatPolygon> to_float(const Region& r) {
    std::vector<FloatPolygon> out;
    for (const auto& p : r.pieces()) {
        FloatPolygon f;
        for (const auto& v : p.vertices()) f.v.emplace_back(v.x.to_double(), v.y.to_double());
        out.push_back(std::move(f));
    }
    return out;
}

Complex ft_float(const std::vector<FloatPolygon>& ps, double xx, double xy) {
    Complex s = 0;
    for (const auto& p : ps) s += ft_polygon(p, xx, xy);
    return s;
}

// sin(pi k w) / (pi k), or w at k = 0.
double interval_factor(long k, double w) { return k == 0 ? w : std::sin(pi * k * w) / (pi * k); }

}  // namespace

Complex ft_indicator(const Region& r, double xi_x, double xi_y) { return ft_float(to_float(r), xi_x, xi_y); }

Complex closed_form_A_hat(long k, long l) {
    if (k == 0 && l == 0) throw std::invalid_argument("closed form needs a nonzero frequency");
    const double s = static_cast<double>(k + l);
    Complex sum = 0;
    for (int j = 0; j < 3; ++j) sum += std::polar(1.0, -2 * pi * 2 * j * s / 3);
    return std::polar(1.0, -2 * pi * s / 3) * interval_factor(k, 2.0 / 3) * interval_factor(l, 2.0 / 3) * sum;
}

Complex closed_form_halfA_hat(long k, long l) {
    if (k == 0 && l == 0) throw std::invalid_argument("closed form needs a nonzero frequency");
    const double s = static_cast<double>(k + l);
    Complex sum = 0;
    for (int j = 0; j < 3; ++j) sum += std::polar(1.0, -2 * pi * j * s / 3);
    return std::polar(1.0, -pi * s / 3) * interval_factor(k, 1.0 / 3) * interval_factor(l, 1.0 / 3) * sum;
}

FourierCheckReport fourier_tiling_check(const Region& r, const Lattice& lattice, double radius, double tol, int k) {
    if (radius < 0 || tol < 0) throw std::invalid_argument("radius and tolerance must be non-negative");
    FourierCheckReport rep;
    rep.radius = radius;
    rep.tolerance = tol;
    const auto ps = to_float(r);
    const double covolume = lattice.covolume().to_double();
    rep.value_at_zero_error = std::abs(ft_float(ps, 0, 0) - Complex(k * covolume, 0));

    const Lattice dual = dual_lattice(lattice);
    const double u1x = dual.v1().x.to_double(), u1y = dual.v1().y.to_double();
    const double u2x = dual.v2().x.to_double(), u2y = dual.v2().y.to_double();
    // Coefficients of a dual point xi are <xi, v1> and <xi, v2>.
    const auto bound = [&](const Vec2& v) {
        return static_cast<long>(std::ceil(radius * std::sqrt(norm2(v).to_double())));
    };
    const long mmax = bound(lattice.v1()), nmax = bound(lattice.v2());
    for (long m = -mmax; m <= mmax; ++m) {
        for (long n = -nmax; n <= nmax; ++n) {
            if (m == 0 && n == 0) continue;
            const double xx = m * u1x + n * u2x, xy = m * u1y + n * u2y;
            if (std::hypot(xx, xy) > radius) continue;
            ++rep.points_checked;
            rep.max_abs_value = std::max(rep.max_abs_value, std::abs(ft_float(ps, xx, xy)));
        }
    }
    rep.passed = rep.max_abs_value <= tol && rep.value_at_zero_error <= tol;
    return rep;
}

}  // namespace cwset
