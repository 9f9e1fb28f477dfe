#include "easygram/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace easygram {

namespace {
constexpr uint64_t kBase = 1ull << 32;
constexpr size_t kKaratsubaThreshold = 40;
} // namespace

BigInt::BigInt(int64_t v) {
    negative_ = v < 0;
    uint64_t u = negative_ ? (~static_cast<uint64_t>(v) + 1u) : static_cast<uint64_t>(v);
    while (u) {
        limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        *this *= BigInt(10);
        *this += BigInt(s[i] - '0');
    }
    negative_ = neg && !is_zero();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0u);
        a[i] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (cur < 0) {
            cur += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<uint32_t>(cur);
    }
    assert(borrow == 0);
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint32_t> BigInt::mul_school(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold)
        return mul_school(a, b);

    size_t half = std::max(a.size(), b.size()) / 2;
    auto lo = [&](const std::vector<uint32_t>& v) {
        return std::vector<uint32_t>(v.begin(), v.begin() + std::min(half, v.size()));
    };
    auto hi = [&](const std::vector<uint32_t>& v) {
        if (v.size() <= half) return std::vector<uint32_t>{};
        return std::vector<uint32_t>(v.begin() + half, v.end());
    };
    std::vector<uint32_t> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    while (!a0.empty() && a0.back() == 0) a0.pop_back();
    while (!b0.empty() && b0.back() == 0) b0.pop_back();

    std::vector<uint32_t> z0 = mul_mag(a0, b0);
    std::vector<uint32_t> z2 = mul_mag(a1, b1);
    std::vector<uint32_t> sa = a0, sb = b0;
    add_mag(sa, a1);
    add_mag(sb, b1);
    std::vector<uint32_t> z1 = mul_mag(sa, sb);
    sub_mag(z1, z0);
    sub_mag(z1, z2);

    std::vector<uint32_t> r = z0;
    std::vector<uint32_t> z1s(half, 0);
    z1s.insert(z1s.end(), z1.begin(), z1.end());
    add_mag(r, z1s);
    std::vector<uint32_t> z2s(2 * half, 0);
    z2s.insert(z2s.end(), z2.begin(), z2.end());
    add_mag(r, z2s);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (negative_ == o.negative_) {
        add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (c > 0) {
            sub_mag(limbs_, o.limbs_);
        } else {
            std::vector<uint32_t> tmp = o.limbs_;
            sub_mag(tmp, limbs_);
            limbs_ = std::move(tmp);
            negative_ = o.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    BigInt t = o;
    if (!t.is_zero()) t.negative_ = !t.negative_;
    return *this += t;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    bool neg = negative_ != o.negative_;
    limbs_ = mul_mag(limbs_, o.limbs_);
    negative_ = neg && !limbs_.empty();
    return *this;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    assert(!b.empty());
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // normalize so the divisor's top limb has its high bit set
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    size_t n = b.size(), m = a.size() - n;
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = a.size(); i-- > 0;) {
        u[i] = a[i] << shift;
        if (shift && i > 0) u[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i - 1]) >> (32 - shift));
    }
    if (shift) u[a.size()] = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) >> (32 - shift));
    for (size_t i = n; i-- > 0;) {
        v[i] = b[i] << shift;
        if (shift && i > 0) v[i] |= static_cast<uint32_t>(static_cast<uint64_t>(b[i - 1]) >> (32 - shift));
    }

    q.assign(m + 1, 0);
    uint64_t vtop = v[n - 1], vsec = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop;
        uint64_t rhat = num % vtop;
        if (qhat >= kBase) {
            qhat = kBase - 1;
            rhat = num - qhat * vtop;
        }
        while (rhat < kBase && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add divisor back
            t += static_cast<int64_t>(kBase);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(cur);
                c2 = cur >> 32;
            }
            t += static_cast<int64_t>(c2);
            t &= 0xffffffff;
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 <= n) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
    r.negative_ = a.negative_ && !r.limbs_.empty();
    q.trim();
    r.trim();
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(r);
    return *this;
}

BigInt BigInt::divide_exact(const BigInt& d) const {
    BigInt q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
    return q;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(limbs_, o.limbs_);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, uint64_t e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

BigInt BigInt::factorial(uint64_t n) {
    BigInt r(1);
    for (uint64_t i = 2; i <= n; ++i) r *= BigInt(static_cast<int64_t>(i));
    return r;
}

BigInt BigInt::binomial(uint64_t n, uint64_t k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (uint64_t i = 0; i < k; ++i) {
        r *= BigInt(static_cast<int64_t>(n - i));
        r = r.divide_exact(BigInt(static_cast<int64_t>(i + 1)));
    }
    return r;
}

BigInt BigInt::falling(const BigInt& n, uint64_t k) {
    BigInt r(1), cur = n;
    for (uint64_t i = 0; i < k; ++i) {
        r *= cur;
        cur -= BigInt(1);
    }
    return r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

int64_t BigInt::to_int64() const {
    assert(fits_int64());
    uint64_t mag = 0;
    if (limbs_.size() > 1) mag = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) mag |= limbs_[0];
    return negative_ ? -static_cast<int64_t>(mag) : static_cast<int64_t>(mag);
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return negative_ ? -r : r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> v = limbs_;
    std::string digits;
    while (!v.empty()) {
        // divide by 10^9 in place
        uint64_t rem = 0;
        for (size_t i = v.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | v[i];
            v[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

size_t BigInt::hash() const {
    size_t h = negative_ ? 0x9e3779b97f4a7c15ull : 0;
    for (uint32_t l : limbs_) h = h * 1000003u + l;
    return h;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

} // namespace easygram
