#include "cwset/geom2d.hpp"

#include <ostream>
#include <stdexcept>

namespace cwset {

Mat2 Mat2::inverse() const {
    Scalar det_ = det();
    if (det_.is_zero()) throw DivisionByZero("singular matrix");
    return {d / det_, -b / det_, -c / det_, a / det_};
}

bool Mat2::is_orthogonal() const { return *this * transpose() == identity(); }

Mat2 rotation(int n) {
    const Scalar half = Rational(1, 2);
    const Scalar root_half = Scalar(0, Rational(1, 2));
    switch (n) {
        case 1: return Mat2::identity();
        case 2: return {-1, 0, 0, -1};
        case 3: return {-half, -root_half, root_half, -half};
        case 4: return {0, -1, 1, 0};
        case 6: return {half, -root_half, root_half, half};
        default: throw std::invalid_argument("no crystallographic rotation of order " + std::to_string(n));
    }
}

Mat2 reflection(const Vec2& v) {
    Scalar n = norm2(v);
    if (n.is_zero()) throw std::invalid_argument("reflection axis must be nonzero");
    Scalar xx = v.x * v.x, yy = v.y * v.y, xy = v.x * v.y;
    return {(xx - yy) / n, (xy + xy) / n, (xy + xy) / n, (yy - xx) / n};
}

Mat2 lattice_matrix_L() { return {1, Rational(1, 2), 0, Scalar(0, Rational(1, 2))}; }

Mat2 lattice_matrix_L_prime() { return {1, Rational(-1, 2), 0, Scalar(0, Rational(1, 2))}; }

Isometry compose(const Isometry& g, const Isometry& h) {
    return {h.m.inverse() * g.t + h.t, g.m * h.m};
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x << ", " << v.y << ')';
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

}  // namespace cwset
