#include "formsym/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace formsym {

namespace {
constexpr uint64_t BASE = 1ull << 32;
constexpr size_t KARATSUBA_CUTOFF = 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) { sign_ = 0; return; }
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ull - (unsigned long long)v;
    while (m) { limbs_.push_back((uint32_t)(m & 0xffffffffu)); m >>= 32; }
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { if (s[i] == '-') sg = -1; ++i; }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt acc;
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * ten + BigInt(s[i] - '0');
    }
    *this = acc;
    if (sg < 0) sign_ = -sign_;
}

BigInt BigInt::from_limbs(int sign, std::vector<uint32_t> limbs) {
    BigInt r;
    r.sign_ = sign;
    r.limbs_ = std::move(limbs);
    r.trim();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
    else if (sign_ == 0) sign_ = 1;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    r[x.size()] = (uint32_t)carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = (int64_t)a[i] - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) { d += (int64_t)BASE; borrow = 1; } else borrow = 0;
        r[i] = (uint32_t)d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_school(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = (uint32_t)cur;
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = (uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() < KARATSUBA_CUTOFF || b.size() < KARATSUBA_CUTOFF)
        return mul_school(a, b);
    size_t half = (std::max(a.size(), b.size()) + 1) / 2;
    auto lo = [&](const std::vector<uint32_t>& v) {
        return std::vector<uint32_t>(v.begin(), v.begin() + std::min(half, v.size()));
    };
    auto hi = [&](const std::vector<uint32_t>& v) {
        if (v.size() <= half) return std::vector<uint32_t>{};
        return std::vector<uint32_t>(v.begin() + half, v.end());
    };
    std::vector<uint32_t> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    std::vector<uint32_t> z0 = mul_mag(a0, b0);
    std::vector<uint32_t> z2 = mul_mag(a1, b1);
    std::vector<uint32_t> s1 = add_mag(a0, a1);
    std::vector<uint32_t> s2 = add_mag(b0, b1);
    std::vector<uint32_t> z1 = mul_mag(s1, s2);
    z1 = sub_mag(z1, z0);
    z1 = sub_mag(z1, z2);
    std::vector<uint32_t> r(std::max({z0.size(), z1.size() + half, z2.size() + 2 * half}) + 1, 0);
    auto add_at = [&](const std::vector<uint32_t>& v, size_t off) {
        uint64_t carry = 0;
        size_t i = 0;
        for (; i < v.size(); ++i) {
            uint64_t cur = (uint64_t)r[off + i] + v[i] + carry;
            r[off + i] = (uint32_t)cur;
            carry = cur >> 32;
        }
        while (carry) {
            uint64_t cur = (uint64_t)r[off + i] + carry;
            r[off + i] = (uint32_t)cur;
            carry = cur >> 32;
            ++i;
        }
    };
    add_at(z0, 0);
    add_at(z1, half);
    add_at(z2, 2 * half);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) { q.clear(); r = a; return; }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = (uint32_t)(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back((uint32_t)rem);
        return;
    }
    // normalize so top limb of divisor has its high bit set
    int shift = 0;
    uint32_t top = b.back();
    while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
    auto shl_vec = [&](const std::vector<uint32_t>& v, int sh) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        uint32_t carry = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] = (v[i] << sh) | carry;
            carry = sh ? (uint32_t)(v[i] >> (32 - sh)) : 0;
        }
        out[v.size()] = carry;
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shift ? shl_vec(a, shift) : a;
    std::vector<uint32_t> v = shift ? shl_vec(b, shift) : b;
    size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);
    uint64_t vtop = v[n - 1], vsecond = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = ((uint64_t)u[j + n] << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop;
        uint64_t rhat = num % vtop;
        if (qhat >= BASE) { qhat = BASE - 1; rhat = num - qhat * vtop; }
        while (rhat < BASE && qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            int64_t d = (int64_t)u[j + i] - (int64_t)(prod & 0xffffffffu) - borrow;
            if (d < 0) { d += (int64_t)BASE; borrow = 1; } else borrow = 0;
            u[j + i] = (uint32_t)d;
        }
        int64_t d = (int64_t)u[j + n] - (int64_t)carry - borrow;
        if (d < 0) {
            // qhat one too large: add back
            d += (int64_t)BASE;
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = (uint64_t)u[j + i] + v[i] + c2;
                u[j + i] = (uint32_t)s;
                c2 = s >> 32;
            }
            d += (int64_t)c2;
            d &= (int64_t)0xffffffffu;
        }
        u[j + n] = (uint32_t)d;
        q[j] = (uint32_t)qhat;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    if (shift) {
        uint32_t carry = 0;
        for (size_t i = u.size(); i-- > 0;) {
            uint32_t cur = u[i];
            u[i] = (cur >> shift) | carry;
            carry = (uint32_t)(cur << (32 - shift));
        }
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    r = u;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) { r.limbs_ = sub_mag(limbs_, o.limbs_); r.sign_ = sign_; }
        else { r.limbs_ = sub_mag(o.limbs_, limbs_); r.sign_ = o.sign_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    int qsign = qm.empty() ? 0 : a.sign_ * b.sign_;
    int rsign = rm.empty() ? 0 : a.sign_;
    q = from_limbs(qsign, std::move(qm));
    r = from_limbs(rsign, std::move(rm));
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return sign_ >= 0 ? c : -c;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::pow(uint64_t e) const {
    BigInt base = *this, acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

BigInt BigInt::shl(uint64_t bits) const {
    if (is_zero()) return *this;
    size_t limb_off = bits / 32;
    int sh = (int)(bits % 32);
    std::vector<uint32_t> r(limbs_.size() + limb_off + 1, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        r[i + limb_off] = (sh ? (limbs_[i] << sh) : limbs_[i]) | carry;
        carry = sh ? (uint32_t)(limbs_[i] >> (32 - sh)) : 0;
    }
    r[limbs_.size() + limb_off] = carry;
    return from_limbs(sign_, std::move(r));
}

BigInt BigInt::shr(uint64_t bits) const {
    if (is_zero()) return *this;
    size_t limb_off = bits / 32;
    if (limb_off >= limbs_.size()) return BigInt();
    int sh = (int)(bits % 32);
    std::vector<uint32_t> r(limbs_.begin() + limb_off, limbs_.end());
    if (sh) {
        uint32_t carry = 0;
        for (size_t i = r.size(); i-- > 0;) {
            uint32_t cur = r[i];
            r[i] = (cur >> sh) | carry;
            carry = (uint32_t)(cur << (32 - sh));
        }
    }
    return from_limbs(sign_, std::move(r));
}

uint64_t BigInt::bit_length() const {
    if (is_zero()) return 0;
    uint64_t bl = (limbs_.size() - 1) * 32ull;
    uint32_t top = limbs_.back();
    while (top) { ++bl; top >>= 1; }
    return bl;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    uint64_t m = ((uint64_t)limbs_[1] << 32) | limbs_[0];
    return sign_ > 0 ? m <= 0x7fffffffffffffffull : m <= 0x8000000000000000ull;
}

long long BigInt::to_ll() const {
    unsigned long long m = 0;
    for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    return sign_ >= 0 ? (long long)m : -(long long)m;
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> chunks; // base 10^9
    std::vector<uint32_t> cur = limbs_;
    while (!cur.empty()) {
        uint64_t rem = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            uint64_t v = (rem << 32) | cur[i];
            cur[i] = (uint32_t)(v / 1000000000u);
            rem = v % 1000000000u;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        chunks.push_back((uint32_t)rem);
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace formsym
