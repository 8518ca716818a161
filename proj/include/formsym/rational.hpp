#ifndef FORMSYM_RATIONAL_HPP
#define FORMSYM_RATIONAL_HPP

#include "formsym/bigint.hpp"

namespace formsym {

// Exact rational in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long n, long long d);
    Rational(BigInt n, BigInt d);
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inv() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(long long e) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }
    int cmp(const Rational& o) const;

    // Nearest integers: floor and ceiling.
    BigInt floor() const;
    BigInt ceil() const;
    // Round to nearest integer (ties toward even not needed; ties go up).
    BigInt round() const;

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const;

    // Dyadic outward rounding helpers: nearest dyadic a/2^bits below resp. above.
    Rational dyadic_below(uint64_t bits) const;
    Rational dyadic_above(uint64_t bits) const;

    // Smallest-denominator rational inside the closed interval [lo, hi]
    // (Stern-Brocot walk). Requires lo <= hi.
    static Rational simplest_in(const Rational& lo, const Rational& hi);

private:
    BigInt num_, den_;
    void normalize();
};

} // namespace formsym

#endif
