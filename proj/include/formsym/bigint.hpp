#ifndef FORMSYM_BIGINT_HPP
#define FORMSYM_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace formsym {

// Arbitrary-precision signed integer, sign + little-endian 32-bit limbs.
// Invariant: no trailing zero limbs; zero is sign 0 with empty limb vector.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_limbs(int sign, std::vector<uint32_t> limbs);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_neg() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated division (C semantics): quotient rounds toward zero.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }
    int cmp(const BigInt& o) const;

    BigInt abs() const;
    BigInt pow(uint64_t e) const;
    BigInt shl(uint64_t bits) const;   // *this * 2^bits
    BigInt shr(uint64_t bits) const;   // floor division by 2^bits of |x|, sign kept
    uint64_t bit_length() const;
    bool is_even() const { return sign_ == 0 || (limbs_[0] & 1u) == 0; }

    static BigInt gcd(BigInt a, BigInt b);

    // Fits in long long? (used for small fast paths and diagnostics)
    bool fits_ll() const;
    long long to_ll() const;
    double to_double() const;

    std::string to_string() const;

private:
    int sign_;
    std::vector<uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_school(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace formsym

#endif
