#include "formsym/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace formsym {

RealInterval::RealInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("RealInterval: lo > hi");
}

RealInterval RealInterval::centered(const Rational& mid, const Rational& rad) {
    return RealInterval(mid - rad, mid + rad);
}

Rational RealInterval::mag() const {
    Rational a = lo.abs(), b = hi.abs();
    return a > b ? a : b;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    Rational c1 = lo * o.lo, c2 = lo * o.hi, c3 = hi * o.lo, c4 = hi * o.hi;
    Rational mn = std::min({c1, c2, c3, c4});
    Rational mx = std::max({c1, c2, c3, c4});
    return {mn, mx};
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
    if (o.contains_zero())
        throw std::domain_error("RealInterval: division by interval containing zero");
    RealInterval rec{o.hi.inv(), o.lo.inv()};
    return *this * rec;
}

RealInterval RealInterval::square() const {
    if (contains_zero()) {
        Rational m = mag();
        return {Rational(0), m * m};
    }
    Rational a = lo * lo, b = hi * hi;
    return {std::min(a, b), std::max(a, b)};
}

RealInterval RealInterval::round_out(uint64_t bits) const {
    return {lo.dyadic_below(bits), hi.dyadic_above(bits)};
}

RealInterval RealInterval::meet(const RealInterval& o) const {
    Rational l = std::max(lo, o.lo), h = std::min(hi, o.hi);
    if (l > h) throw std::domain_error("RealInterval: empty intersection");
    return {l, h};
}

std::string RealInterval::to_string() const {
    return "[" + lo.to_string() + "," + hi.to_string() + "]";
}

ComplexInterval ComplexInterval::centered(const GaussianRational& mid, const Rational& rad) {
    return {RealInterval::centered(mid.re(), rad), RealInterval::centered(mid.im(), rad)};
}

Rational ComplexInterval::rad() const {
    Rational a = re.rad(), b = im.rad();
    return a > b ? a : b;
}

ComplexInterval ComplexInterval::operator*(const ComplexInterval& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

ComplexInterval ComplexInterval::operator/(const ComplexInterval& o) const {
    RealInterval n = o.norm();
    if (n.contains_zero())
        throw std::domain_error("ComplexInterval: division by interval containing zero");
    ComplexInterval t = *this * o.conj();
    return {t.re / n, t.im / n};
}

ComplexInterval ComplexInterval::pow(uint32_t e) const {
    ComplexInterval acc{RealInterval(Rational(1)), RealInterval(Rational(0))};
    ComplexInterval base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

ComplexInterval ComplexInterval::round_out(uint64_t bits) const {
    return {re.round_out(bits), im.round_out(bits)};
}

bool ComplexInterval::strictly_inside(const ComplexInterval& o) const {
    return o.re.lo < re.lo && re.hi < o.re.hi && o.im.lo < im.lo && im.hi < o.im.hi;
}

std::string ComplexInterval::to_string() const {
    return re.to_string() + "+" + im.to_string() + "*i";
}

} // namespace formsym
