#pragma once

#include "easygram/bigint.hpp"
#include "easygram/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace easygram {

// Dense univariate polynomial over a commutative ring R. R must provide
// default construction (zero), construction from int64_t, ring arithmetic,
// equality, and to_string(). Trailing zeros are always trimmed, so the zero
// polynomial has empty coefficient storage.
//
// Nesting gives multivariate coefficients: Poly<Poly<Rational>> is Q[s][t].
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(int64_t c) { coeffs_.push_back(R(c)); trim(); }
    Poly(R c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() {
        Poly p;
        p.coeffs_ = {R(0), R(1)};
        return p;
    }
    static Poly monomial(R c, size_t deg) {
        Poly p;
        p.coeffs_.assign(deg + 1, R(0));
        p.coeffs_[deg] = std::move(c);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    R coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = R(0) - c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<R> r(coeffs_.size() + o.coeffs_.size() - 1, R(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                r[i + j] += coeffs_[i] * o.coeffs_[j];
        coeffs_ = std::move(r);
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(Poly a, const Poly& b) { a *= b; return a; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    static Poly pow(const Poly& base, uint64_t e) {
        Poly r(1);
        Poly b = base;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    template <class S>
    S evaluate(const S& x) const {
        S acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + S(coeffs_[i]);
        return acc;
    }

    // substitute another polynomial for the variable
    Poly compose(const Poly& x) const {
        Poly acc;
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Poly(coeffs_[i]);
        return acc;
    }

    std::string to_string(const std::string& var = "N") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == R(0)) coeffs_.pop_back();
    }
    std::vector<R> coeffs_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

// lift an exact integer into any ring reachable from the rationals
template <class R>
R ring_cast(const BigInt& v) {
    return R(Rational(v));
}
template <>
inline BigInt ring_cast<BigInt>(const BigInt& v) {
    return v;
}
template <>
inline Rational ring_cast<Rational>(const BigInt& v) {
    return Rational(v);
}
template <>
inline IntPoly ring_cast<IntPoly>(const BigInt& v) {
    return IntPoly(v);
}

// Exact quotient for polynomials over an integral domain; throws if the
// division is not exact. Used by fraction-free elimination over Z[N].
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly: division by zero");
    if (a.is_zero()) return IntPoly();
    std::vector<BigInt> rem(a.coeffs());
    int db = b.degree();
    const BigInt& lead = b.coeffs().back();
    std::vector<BigInt> q(a.degree() - db + 1, BigInt(0));
    for (int i = a.degree(); i >= db;) {
        BigInt c = rem[i].divide_exact(lead);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
        while (i >= 0 && rem[i].is_zero()) --i;
        if (i < db) break;
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::logic_error("poly: inexact division");
    return IntPoly(std::move(q));
}

template <class R>
std::string Poly<R>::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == R(0)) continue;
        std::string cs = coeffs_[i].to_string();
        if (!s.empty()) {
            if (!cs.empty() && cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") {
                if (cs == "-1") s += "-";
                else s += cs + "*";
            }
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace easygram
