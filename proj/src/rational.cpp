#include "formsym/rational.hpp"

#include <stdexcept>

namespace formsym {

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    if (den_.is_neg()) { num_ = -num_; den_ = -den_; }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    if (o.is_zero()) return *this;
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    if (is_zero() || o.is_zero()) return Rational();
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (is_zero()) return Rational();
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inv().pow(-e);
    Rational r(BigInt(num_.pow((uint64_t)e)), BigInt(den_.pow((uint64_t)e)));
    return r;
}

int Rational::cmp(const Rational& o) const {
    return (num_ * o.den_).cmp(o.num_ * den_);
}

BigInt Rational::floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (r.is_zero() || !num_.is_neg()) return q;
    return q - BigInt(1);
}

BigInt Rational::ceil() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (r.is_zero() || num_.is_neg()) return q;
    return q + BigInt(1);
}

BigInt Rational::round() const {
    // floor(x + 1/2)
    Rational shifted = *this + Rational(1, 2);
    return shifted.floor();
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::dyadic_below(uint64_t bits) const {
    // floor(x * 2^bits) / 2^bits
    Rational scaled(num_.shl(bits), den_);
    return Rational(scaled.floor(), BigInt(1).shl(bits));
}

Rational Rational::dyadic_above(uint64_t bits) const {
    Rational scaled(num_.shl(bits), den_);
    return Rational(scaled.ceil(), BigInt(1).shl(bits));
}

namespace {
// 0 < a <= b
Rational simplest_pos(const Rational& a, const Rational& b) {
    BigInt ca = a.ceil();
    if (Rational(ca) <= b) return Rational(ca);
    // both endpoints lie strictly inside (k, k+1)
    BigInt k = a.floor();
    Rational ka(k);
    Rational inner = simplest_pos((b - ka).inv(), (a - ka).inv());
    return ka + inner.inv();
}
}

Rational Rational::simplest_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_in: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_in(-hi, -lo);
    return simplest_pos(lo, hi);
}

} // namespace formsym
