#pragma once

#include "easygram/poly.hpp"
#include "easygram/rational.hpp"

#include <string>
#include <vector>

namespace easygram {

// s-th cyclotomic polynomial, integer coefficients
IntPoly cyclotomic_polynomial(int s);

// Element of Q[x]/(Phi_s(x)), x the primitive s-th root of unity. Reduced
// coefficient vectors, so equality is coefficient equality. s = 1, 2
// degenerate to the rationals.
class Cyclotomic {
public:
    Cyclotomic() : s_(1), coeffs_{} {}
    Cyclotomic(int64_t v) : s_(1) {
        if (v != 0) coeffs_.push_back(Rational(v));
    }
    Cyclotomic(Rational v) : s_(1) {
        if (!v.is_zero()) coeffs_.push_back(std::move(v));
    }
    Cyclotomic(int s, Rational constant) : s_(1) {
        (void)s;  // a rational constant is order-free
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    static Cyclotomic zero(int s) { return Cyclotomic(s, Rational(0)); }

    // zeta_s^e
    static Cyclotomic root_power(int s, int64_t e);

    int order() const { return s_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_rational() const { return coeffs_.size() <= 1; }
    Rational rational_value() const;  // throws if not rational

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& r);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { a += b; return a; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { a -= b; return a; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { a *= b; return a; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { a *= r; return a; }

    bool operator==(const Cyclotomic& o) const { return s_ == o.s_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // deterministic order for atom listings
    bool operator<(const Cyclotomic& o) const;

    Cyclotomic conjugate() const;  // zeta -> zeta^{-1}

    // lift a rational constant to the other operand's order
    void match_order(const Cyclotomic& o);

    std::string to_string() const;

private:
    int s_;
    std::vector<Rational> coeffs_;  // reduced mod Phi_s, trailing zeros trimmed
    void reduce(std::vector<Rational>& raw) const;
    void trim();
};

} // namespace easygram
