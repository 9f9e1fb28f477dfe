#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>

namespace easygram {

// Arbitrary-precision signed integer on 32-bit limbs, little-endian.
// Values are kept normalized: no leading zero limbs, zero has empty limbs
// and positive sign.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal) { return BigInt(decimal); }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);   // truncated toward zero
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }
    friend BigInt operator/(BigInt a, const BigInt& b) { a /= b; return a; }
    friend BigInt operator%(BigInt a, const BigInt& b) { a %= b; return a; }

    // quotient and remainder in one pass; remainder has the dividend's sign
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // division that asserts exactness (used by fraction-free elimination)
    BigInt divide_exact(const BigInt& d) const;

    bool operator==(const BigInt& o) const { return negative_ == o.negative_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, uint64_t e);
    static BigInt factorial(uint64_t n);
    static BigInt binomial(uint64_t n, uint64_t k);
    // falling factorial n(n-1)...(n-k+1)
    static BigInt falling(const BigInt& n, uint64_t k);

    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool fits_int64() const;
    int64_t to_int64() const;      // asserts fits_int64
    double to_double() const;

    std::string to_string() const;
    size_t hash() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_school(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace easygram
