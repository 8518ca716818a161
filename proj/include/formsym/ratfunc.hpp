#ifndef FORMSYM_RATFUNC_HPP
#define FORMSYM_RATFUNC_HPP

#include "formsym/multipoly.hpp"

#include <stdexcept>

namespace formsym {

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduced fraction of multivariate polynomials: gcd(num, den) = 1 and the
// denominator is monic under graded-lex, so equal functions compare equal
// structurally.
class RationalFunction {
public:
    RationalFunction() : num_(), den_() {}
    // reduces and normalizes
    RationalFunction(MultiPoly num, MultiPoly den);
    static RationalFunction from_poly(MultiPoly p);
    // trusts the caller that gcd(num, den) = 1; only normalizes the scale
    static RationalFunction from_coprime(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussianRational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inv() const;
    RationalFunction pow(long long e) const;
    RationalFunction scaled(const GaussianRational& c) const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    GaussianRational evaluate(const std::map<std::string, GaussianRational>& a) const;
    // Substitute polynomials for variables in both numerator and denominator.
    RationalFunction substitute(const std::map<std::string, MultiPoly>& images) const;

    std::string to_string() const;

private:
    MultiPoly num_, den_;
};

RationalFunction reduce_fraction(MultiPoly num, MultiPoly den);

// Reduced form of num / base^e, cancelling against the small base polynomial
// one copy at a time (each peel removes gcd(cur, base); the total removed is
// exactly gcd(num, base^e)).
RationalFunction reduce_power_fraction(MultiPoly num, const MultiPoly& base, uint32_t e);

} // namespace formsym

#endif
