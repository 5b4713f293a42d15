#pragma once

// Exact arithmetic in the quadratic field Q(sqrt 3).
//
// Every lattice basis, point-group matrix and catalog vertex used by this
// library lies in Q(sqrt 3), so all geometric predicates are decided exactly.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cwset {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Parses "p" or "p/q" with an optional leading sign.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    mpz_class floor() const;
    double to_double() const { return q_.get_d(); }
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// Element a + b*sqrt(3) of Q(sqrt 3). The representation is unique, so
/// equality is structural.
class Scalar {
public:
    Scalar() = default;
    template <std::integral I>
    Scalar(I n) : a_(n) {}  // NOLINT(implicit)
    Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
    Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Scalar sqrt3() { return Scalar(Rational(0), Rational(1)); }

    /// Accepts "p/q", "p/q+r/s√3", "r/s√3", "-√3" and the ASCII spelling "sqrt3".
    static Scalar parse(std::string_view text);

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign of the real number a + b*sqrt(3).
    int sign() const;
    /// Binary64 value, accurate to about one ulp even under cancellation.
    double to_double() const;
    Scalar conjugate() const { return Scalar(a_, -b_); }
    /// Field norm a^2 - 3b^2; zero only for zero.
    Rational norm() const { return a_ * a_ - Rational(3) * b_ * b_; }
    std::string str() const;

    Scalar operator-() const { return Scalar(-a_, -b_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

private:
    Rational a_;
    Rational b_;
};

Scalar abs(const Scalar& x);
const Scalar& min(const Scalar& x, const Scalar& y);
const Scalar& max(const Scalar& x, const Scalar& y);
/// Largest integer not exceeding x.
mpz_class floor(const Scalar& x);
/// Smallest integer not below x.
mpz_class ceil(const Scalar& x);
/// Integer power of a rational; negative exponents allowed for nonzero base.
Rational pow(const Rational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cwset
