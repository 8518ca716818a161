#ifndef FORMSYM_INTERVAL_HPP
#define FORMSYM_INTERVAL_HPP

#include "formsym/gaussian.hpp"

#include <string>

namespace formsym {

// Closed interval with exact rational endpoints. All operations are outward
// exact (no rounding happens in the arithmetic itself); round_out() compacts
// endpoints to dyadics to keep denominators from growing.
struct RealInterval {
    Rational lo, hi;

    RealInterval() {}
    RealInterval(Rational point) : lo(point), hi(point) {}
    RealInterval(Rational l, Rational h);

    static RealInterval centered(const Rational& mid, const Rational& rad);

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool is_point() const { return lo == hi; }
    bool intersects(const RealInterval& o) const { return !(hi < o.lo || o.hi < lo); }
    Rational mid() const { return (lo + hi) * Rational(1, 2); }
    Rational rad() const { return (hi - lo) * Rational(1, 2); }
    Rational mag() const;   // max |x| over the interval

    RealInterval operator-() const { return {-hi, -lo}; }
    RealInterval operator+(const RealInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RealInterval operator-(const RealInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RealInterval operator*(const RealInterval& o) const;
    RealInterval operator/(const RealInterval& o) const;   // o must exclude 0
    RealInterval square() const;
    RealInterval round_out(uint64_t bits) const;
    // intersection; throws if empty
    RealInterval meet(const RealInterval& o) const;

    std::string to_string() const;
};

// Rectangular complex interval.
struct ComplexInterval {
    RealInterval re, im;

    ComplexInterval() {}
    ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexInterval(const GaussianRational& z) : re(z.re()), im(z.im()) {}

    static ComplexInterval centered(const GaussianRational& mid, const Rational& rad);

    bool contains(const GaussianRational& z) const { return re.contains(z.re()) && im.contains(z.im()); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool intersects(const ComplexInterval& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    GaussianRational mid() const { return {re.mid(), im.mid()}; }
    Rational rad() const;   // max of component radii
    bool is_point() const { return re.is_point() && im.is_point(); }

    ComplexInterval operator-() const { return {-re, -im}; }
    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    ComplexInterval operator-(const ComplexInterval& o) const { return {re - o.re, im - o.im}; }
    ComplexInterval operator*(const ComplexInterval& o) const;
    ComplexInterval operator/(const ComplexInterval& o) const;  // o must exclude 0
    ComplexInterval conj() const { return {re, -im}; }
    RealInterval norm() const { return re.square() + im.square(); }
    ComplexInterval pow(uint32_t e) const;
    ComplexInterval round_out(uint64_t bits) const;
    ComplexInterval meet(const ComplexInterval& o) const { return {re.meet(o.re), im.meet(o.im)}; }
    // strict containment in the interior of o (both components)
    bool strictly_inside(const ComplexInterval& o) const;

    std::string to_string() const;
};

} // namespace formsym

#endif
