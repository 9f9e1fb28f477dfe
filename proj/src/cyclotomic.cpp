#include "easygram/cyclotomic.hpp"

#include "easygram/partition.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace easygram {

IntPoly cyclotomic_polynomial(int s) {
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    std::function<IntPoly(int)> compute = [&](int n) -> IntPoly {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        // x^n - 1 divided by the product of the proper-divisor cyclotomics
        std::vector<BigInt> xn(n + 1, BigInt(0));
        xn[0] = BigInt(-1);
        xn[n] = BigInt(1);
        IntPoly result(std::move(xn));
        for (int d = 1; d < n; ++d)
            if (n % d == 0) result = divide_exact(result, compute(d));
        cache[n] = result;
        return result;
    };
    return compute(s);
}

void Cyclotomic::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    // rational constants carry no root-of-unity content; keep them at order 1
    // so that equality and zero tests ignore the ambient order
    if (coeffs_.size() <= 1) s_ = 1;
}

void Cyclotomic::reduce(std::vector<Rational>& raw) const {
    IntPoly phi = cyclotomic_polynomial(s_);
    int deg = phi.degree();
    // divide with remainder by the monic Phi_s
    for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
        Rational c = raw[i];
        if (c.is_zero()) continue;
        raw[i] = Rational(0);
        for (int j = 0; j < deg; ++j)
            raw[i - deg + j] -= c * Rational(phi.coeff(static_cast<size_t>(j)));
    }
    raw.resize(static_cast<size_t>(deg) < raw.size() ? deg : raw.size());
}

Cyclotomic Cyclotomic::root_power(int s, int64_t e) {
    if (s < 1) throw DomainError("cyclotomic: order must be positive");
    int64_t r = ((e % s) + s) % s;
    Cyclotomic z;
    z.s_ = s;
    std::vector<Rational> raw(static_cast<size_t>(r) + 1, Rational(0));
    raw[static_cast<size_t>(r)] = Rational(1);
    z.reduce(raw);
    z.coeffs_ = std::move(raw);
    z.trim();
    return z;
}

Rational Cyclotomic::rational_value() const {
    if (coeffs_.empty()) return Rational(0);
    if (coeffs_.size() > 1) throw DomainError("cyclotomic: value is irrational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

void Cyclotomic::match_order(const Cyclotomic& o) {
    if (s_ == o.s_) return;
    if (coeffs_.size() <= 1) {
        s_ = o.s_;
        return;
    }
    throw DomainError("cyclotomic: mixed orders");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (s_ != o.s_) {
        if (o.coeffs_.size() <= 1) {
            // adding a rational constant touches only the constant slot
            if (!o.coeffs_.empty()) {
                if (coeffs_.empty()) coeffs_.push_back(Rational(0));
                coeffs_[0] += o.coeffs_[0];
            }
            trim();
            return *this;
        }
        match_order(o);
    }
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (s_ != o.s_) {
        if (o.coeffs_.size() <= 1) return *this *= (o.coeffs_.empty() ? Rational(0) : o.coeffs_[0]);
        match_order(o);
    }
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> raw(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) raw[i + j] += coeffs_[i] * o.coeffs_[j];
    reduce(raw);
    coeffs_ = std::move(raw);
    trim();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    if (r.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= r;
    return *this;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (s_ != o.s_) return s_ < o.s_;
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    return false;
}

Cyclotomic Cyclotomic::conjugate() const {
    Cyclotomic r = Cyclotomic::zero(s_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Cyclotomic term = root_power(s_, -static_cast<int64_t>(i));
        term *= coeffs_[i];
        r += term;
    }
    return r;
}

std::string Cyclotomic::to_string() const {
    if (coeffs_.empty()) return "0";
    if (coeffs_.size() == 1) return coeffs_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[i].to_string();
        if (i >= 1) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

} // namespace easygram
