#pragma once

#include "easygram/bigint.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace easygram {

// Integer-coefficient Laurent polynomial in one formal variable, with
// exponents measured in quarter units. One type serves three uses:
//   - the Kauffman bracket variable A = q^{-1/4} (or q^{1/4}): one quarter unit
//   - Jones output in powers of q^{1/2}: two quarter units
//   - a plain formal variable (loop parameter delta): four quarter units
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int64_t c) {
        if (c != 0) terms_[0] = BigInt(c);
    }
    LaurentPoly(BigInt c) {
        if (!c.is_zero()) terms_[0] = std::move(c);
    }

    // single term c * x^(quarters/4)
    static LaurentPoly term(BigInt c, int quarters) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[quarters] = std::move(c);
        return p;
    }
    static LaurentPoly variable(int quarters = 4) { return term(BigInt(1), quarters); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }

    BigInt coeff(int quarters) const {
        auto it = terms_.find(quarters);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_[e] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        LaurentPoly r;
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) {
                BigInt p = c1 * c2;
                auto it = r.terms_.find(e1 + e2);
                if (it == r.terms_.end()) {
                    r.terms_[e1 + e2] = std::move(p);
                } else {
                    it->second += p;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        *this = std::move(r);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { a *= b; return a; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    static LaurentPoly pow(const LaurentPoly& base, uint64_t e) {
        LaurentPoly r(1);
        LaurentPoly b = base;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // substitute x -> x^m (m may be negative, e.g. mirror q -> 1/q)
    LaurentPoly scale_exponents(int m) const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e * m] = c;
        return r;
    }

    bool exponents_divisible_by(int d) const {
        for (auto& [e, c] : terms_)
            if (e % d != 0) return false;
        return true;
    }

    // render with exponents in q^{1/2} units: "q^{3}" or "q^{5/2}" keys
    std::string exponent_label(int quarters) const {
        if (quarters % 4 == 0) return std::to_string(quarters / 4);
        if (quarters % 2 == 0) return std::to_string(quarters / 2) + "/2";
        return std::to_string(quarters) + "/4";
    }

    std::string to_string(const std::string& var = "q") const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [e, c] : terms_) {
            std::string cs = c.to_string();
            if (!s.empty()) {
                if (cs[0] == '-') {
                    s += " - ";
                    cs = cs.substr(1);
                } else {
                    s += " + ";
                }
            }
            if (e == 0) {
                s += cs;
            } else {
                if (cs == "1") cs.clear();
                else if (cs == "-1") cs = "-";
                else cs += "*";
                s += cs + var + "^(" + exponent_label(e) + ")";
            }
        }
        return s;
    }

private:
    std::map<int, BigInt> terms_;
};

} // namespace easygram
