#include "formsym/gaussian.hpp"

#include <stdexcept>

namespace formsym {

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (im_.is_zero() && o.im_.is_zero()) return {re_ * o.re_};
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (is_zero()) return {};
    if (o.im_.is_zero()) return {re_ / o.re_, im_ / o.re_};
    Rational n = o.norm();
    GaussianRational t = *this * o.conj();
    return {t.re_ / n, t.im_ / n};
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    GaussianRational acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im_part;
    if (im_.is_one()) im_part = "i";
    else if (im_ == Rational(-1)) im_part = "-i";
    else im_part = im_.to_string() + "*i";
    if (re_.is_zero()) return im_part;
    if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
    return re_.to_string() + im_part;
}

GaussianRational gaussian_int_gcd(const GaussianRational& a, const GaussianRational& b) {
    if (!a.re().is_integer() || !a.im().is_integer() ||
        !b.re().is_integer() || !b.im().is_integer())
        throw std::invalid_argument("gaussian_int_gcd: non-integral input");
    // rational-coefficient work stays entirely in Z
    if (a.im().is_zero() && b.im().is_zero())
        return GaussianRational(Rational(BigInt::gcd(a.re().num(), b.re().num())));
    if (a.re().is_zero() && b.re().is_zero())
        return GaussianRational(Rational(BigInt::gcd(a.im().num(), b.im().num())));
    GaussianRational x = a, y = b;
    while (!y.is_zero()) {
        // Euclidean step with rounded quotient
        GaussianRational q = x / y;
        GaussianRational qr(Rational(q.re().round()), Rational(q.im().round()));
        GaussianRational r = x - qr * y;
        x = y;
        y = r;
    }
    return x;
}

} // namespace formsym
