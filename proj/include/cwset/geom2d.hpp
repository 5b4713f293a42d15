#pragma once

#include "cwset/exactfield.hpp"

#include <iosfwd>

namespace cwset {

struct Vec2 {
    Scalar x;
    Scalar y;

    Vec2() = default;
    Vec2(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}

    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Scalar norm2(const Vec2& a) { return dot(a, a); }

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    Scalar a{1}, b{0}, c{0}, d{1};

    Mat2() = default;
    Mat2(Scalar a_, Scalar b_, Scalar c_, Scalar d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity() { return {}; }
    static Mat2 scale(const Scalar& s) { return {s, 0, 0, s}; }
    static Mat2 diagonal(const Scalar& sx, const Scalar& sy) { return {sx, 0, 0, sy}; }
    /// Matrix whose columns are u and v.
    static Mat2 columns(const Vec2& u, const Vec2& v) { return {u.x, v.x, u.y, v.y}; }

    Scalar det() const { return a * d - b * c; }
    Mat2 transpose() const { return {a, c, b, d}; }
    /// Throws DivisionByZero for singular matrices.
    Mat2 inverse() const;
    bool is_orthogonal() const;

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Counter-clockwise rotation by 2*pi/n for n in {1, 2, 3, 4, 6}.
Mat2 rotation(int n);
/// Reflection in the line through the origin with direction v.
Mat2 reflection(const Vec2& v);
/// Hexagonal lattice matrix with columns (1, 0) and (1/2, sqrt3/2).
Mat2 lattice_matrix_L();
/// Hexagonal lattice matrix with columns (1, 0) and (-1/2, sqrt3/2).
Mat2 lattice_matrix_L_prime();

/// Isometry [t, m] acting by z -> m (t + z).
struct Isometry {
    Vec2 t;
    Mat2 m;

    static Isometry identity() { return {}; }
    static Isometry translation(const Vec2& v) { return {v, Mat2::identity()}; }
    static Isometry linear(const Mat2& m) { return {Vec2{0, 0}, m}; }

    Vec2 apply(const Vec2& p) const { return m * (t + p); }
    friend bool operator==(const Isometry&, const Isometry&) = default;
};

/// Group product [x, L] . [y, M] = [M^-1 x + y, L M]; the result acts as g after h.
Isometry compose(const Isometry& g, const Isometry& h);
inline Vec2 apply(const Isometry& g, const Vec2& p) { return g.apply(p); }

std::ostream& operator<<(std::ostream& os, const Vec2& v);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace cwset
