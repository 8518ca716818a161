#include "formsym/ratfunc.hpp"

namespace formsym {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
    MultiPoly::align(num, den);
    if (num.is_zero()) {
        num_ = num;
        den_ = MultiPoly::constant(num.vars(), GaussianRational(1));
        return;
    }
    MultiPoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    MonomialOrder grlex = MonomialOrder::grlex();
    GaussianRational lc = den.leading_term(grlex).second;
    num_ = num.scaled(lc.inv());
    den_ = den.scaled(lc.inv());
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
    MultiPoly one = MultiPoly::constant(p.vars(), GaussianRational(1));
    RationalFunction r;
    r.num_ = std::move(p);
    r.den_ = std::move(one);
    return r;
}

RationalFunction RationalFunction::from_coprime(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
    MultiPoly::align(num, den);
    RationalFunction r;
    if (num.is_zero()) {
        r.num_ = num;
        r.den_ = MultiPoly::constant(num.vars(), GaussianRational(1));
        return r;
    }
    GaussianRational lc = den.leading_term(MonomialOrder::grlex()).second;
    r.num_ = num.scaled(lc.inv());
    r.den_ = den.scaled(lc.inv());
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("RationalFunction: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw DivisionByZero("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    RationalFunction r;
    r.num_ = num_.pow((uint32_t)e);
    r.den_ = den_.pow((uint32_t)e);
    return RationalFunction(r.num_, r.den_);
}

RationalFunction RationalFunction::scaled(const GaussianRational& c) const {
    RationalFunction r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

GaussianRational RationalFunction::evaluate(const std::map<std::string, GaussianRational>& a) const {
    GaussianRational d = den_.evaluate(a);
    if (d.is_zero()) throw DivisionByZero("RationalFunction: denominator vanishes at point");
    return num_.evaluate(a) / d;
}

RationalFunction RationalFunction::substitute(const std::map<std::string, MultiPoly>& images) const {
    return RationalFunction(num_.substitute(images), den_.substitute(images));
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) {
        if (den_.constant_value().is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction reduce_fraction(MultiPoly num, MultiPoly den) {
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction reduce_power_fraction(MultiPoly num, const MultiPoly& base, uint32_t e) {
    if (base.is_zero()) throw DivisionByZero("reduce_power_fraction: zero base");
    if (num.is_zero()) return RationalFunction(std::move(num), base);
    MultiPoly removed = MultiPoly::constant(base.vars(), GaussianRational(1));
    MultiPoly cur = std::move(num);
    for (uint32_t t = 0; t < e; ++t) {
        MultiPoly g = poly_gcd(cur, base);
        if (g.is_constant()) break;
        cur = cur.exact_div(g);
        removed = removed * g;
    }
    MultiPoly den = base.pow(e).exact_div(removed);
    return RationalFunction::from_coprime(std::move(cur), std::move(den));
}

} // namespace formsym
