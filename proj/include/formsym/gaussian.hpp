#ifndef FORMSYM_GAUSSIAN_HPP
#define FORMSYM_GAUSSIAN_HPP

#include "formsym/rational.hpp"

namespace formsym {

// Element of Q(i): re + im*i with exact rational components.
class GaussianRational {
public:
    GaussianRational() {}
    GaussianRational(long long v) : re_(v) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const;
    GaussianRational operator/(const GaussianRational& o) const;
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
    GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inv() const;
    GaussianRational pow(long long e) const;

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
    // Arbitrary total order for canonical storage / determinism.
    bool operator<(const GaussianRational& o) const {
        int c = re_.cmp(o.re_);
        if (c) return c < 0;
        return im_ < o.im_;
    }

    std::string to_string() const;

private:
    Rational re_, im_;
};

// gcd of Gaussian integers (inputs must be integral); result defined up to units.
GaussianRational gaussian_int_gcd(const GaussianRational& a, const GaussianRational& b);

} // namespace formsym

#endif
