#include "cwset/exactfield.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace cwset {

namespace {

constexpr std::string_view kRootGlyph = "√3";
constexpr std::string_view kRootAscii = "sqrt3";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// sqrt(3) to 256 bits; only used for the final binary64 conversion.
const mpf_class& sqrt3_mpf() {
    static const mpf_class value = [] {
        mpf_class r(3, 256);
        mpf_sqrt(r.get_mpf_t(), r.get_mpf_t());
        return r;
    }();
    return value;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw DivisionByZero("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty scalar");
    std::string_view root;
    if (s.size() >= kRootGlyph.size() && s.substr(s.size() - kRootGlyph.size()) == kRootGlyph)
        root = kRootGlyph;
    else if (s.size() >= kRootAscii.size() && s.substr(s.size() - kRootAscii.size()) == kRootAscii)
        root = kRootAscii;
    if (root.empty()) return Scalar(Rational::parse(s));

    std::string_view body = s.substr(0, s.size() - root.size());
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    std::string_view a_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view b_text = split == std::string_view::npos ? body : body.substr(split);
    Rational a = a_text.empty() ? Rational(0) : Rational::parse(a_text);
    Rational b;
    if (b_text.empty() || b_text == "+")
        b = Rational(1);
    else if (b_text == "-")
        b = Rational(-1);
    else
        b = Rational::parse(b_text);
    return Scalar(std::move(a), std::move(b));
}

int Scalar::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
    // Opposite signs: compare a^2 with 3 b^2.
    Rational lhs = a_ * a_;
    Rational rhs = Rational(3) * b_ * b_;
    int c = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    return sa > 0 ? c : -c;
}

double Scalar::to_double() const {
    if (b_.is_zero()) return a_.to_double();
    constexpr mp_bitcnt_t prec = 256;
    mpf_class a(a_.value(), prec), b(b_.value(), prec);
    mpf_class r(0, prec);
    if (a_.sign() * b_.sign() < 0) {
        // a + b r = (a^2 - 3b^2) / (a - b r); the denominator has no cancellation.
        mpf_class n(norm().value(), prec);
        r = n / (a - b * sqrt3_mpf());
    } else {
        r = a + b * sqrt3_mpf();
    }
    return r.get_d();
}

std::string Scalar::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out = a_.str();
    if (b_.sign() > 0 && !out.empty()) out += '+';
    if (b_ == Rational(-1))
        out += '-';
    else if (b_ != Rational(1))
        out += b_.str();
    out += kRootGlyph;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + Rational(3) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    if (o.b_.is_zero()) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    Rational n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }
const Scalar& min(const Scalar& x, const Scalar& y) { return y < x ? y : x; }
const Scalar& max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

mpz_class floor(const Scalar& x) {
    if (x.is_rational()) return x.rational_part().floor();
    mpz_class f(std::floor(x.to_double()));
    while (Scalar(Rational(mpq_class(f))) > x) f -= 1;
    while (Scalar(Rational(mpq_class(f + 1))) <= x) f += 1;
    return f;
}

mpz_class ceil(const Scalar& x) {
    mpz_class f = floor(x);
    return Scalar(Rational(mpq_class(f))) == x ? f : mpz_class(f + 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace cwset
