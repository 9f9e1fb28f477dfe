#include "easygram/prob_laws.hpp"

#include <cmath>
#include <complex>

namespace easygram {

std::optional<CategoryId> LawSpec::category() const {
    switch (family) {
        case LawFamily::Poisson: return CategoryId::of(CategoryFamily::P);
        case LawFamily::BesselReal: return CategoryId::of(CategoryFamily::P_even);
        case LawFamily::Bessel: return CategoryId::ps(s);
        case LawFamily::Gaussian: return CategoryId::of(CategoryFamily::P2);
        case LawFamily::ComplexGaussian: return CategoryId::of(CategoryFamily::CP2);
        case LawFamily::Semicircle: return CategoryId::of(CategoryFamily::NC2);
        case LawFamily::Circular: return CategoryId::of(CategoryFamily::CNC2);
        case LawFamily::MarchenkoPastur: return CategoryId::of(CategoryFamily::NC);
        case LawFamily::FreeBessel: return CategoryId::ncs(s);
        case LawFamily::FreeBesselReal: return CategoryId::of(CategoryFamily::NC_even);
        default: return std::nullopt;
    }
}

LawFamily law_family_from_token(const std::string& token) {
    if (token == "poisson") return LawFamily::Poisson;
    if (token == "bessel-real") return LawFamily::BesselReal;
    if (token == "bessel") return LawFamily::Bessel;
    if (token == "gaussian") return LawFamily::Gaussian;
    if (token == "complex-gaussian") return LawFamily::ComplexGaussian;
    if (token == "semicircle") return LawFamily::Semicircle;
    if (token == "circular") return LawFamily::Circular;
    if (token == "marchenko-pastur" || token == "mp") return LawFamily::MarchenkoPastur;
    if (token == "free-bessel") return LawFamily::FreeBessel;
    if (token == "free-bessel-real") return LawFamily::FreeBesselReal;
    if (token == "arcsine") return LawFamily::Arcsine;
    if (token == "modified-arcsine") return LawFamily::ModifiedArcsine;
    if (token == "dirac") return LawFamily::Dirac;
    if (token == "compound-poisson") return LawFamily::CompoundPoisson;
    throw DomainError("unknown law: " + token);
}

RatPoly colored_moment_poly(const LawSpec& law, const ColoredWord& word) {
    auto cat = law.category();
    if (!cat) throw DomainError("law has no partition-sum moments");
    RatPoly sum;
    for (const auto& pi : members(*cat, word))
        sum += RatPoly::monomial(Rational(1), pi.num_blocks());
    return sum;
}

namespace {

// closed block counts for the four classical families, serving the long
// moment sequences the Stieltjes path needs
std::optional<RatPoly> counted_moment(const LawSpec& law, int k) {
    RatPoly sum;
    switch (law.family) {
        case LawFamily::Poisson:
            for (int b = 1; b <= k; ++b)
                sum += RatPoly::monomial(Rational(stirling2(k, b)), b);
            return sum;
        case LawFamily::Gaussian: {
            if (k % 2) return RatPoly();
            BigInt dfac(1);
            for (int j = k - 1; j > 1; j -= 2) dfac *= BigInt(j);
            return RatPoly::monomial(Rational(dfac), k / 2);
        }
        case LawFamily::Semicircle:
            if (k % 2) return RatPoly();
            return RatPoly::monomial(Rational(catalan_number(k / 2)), k / 2);
        case LawFamily::MarchenkoPastur:
            for (int b = 1; b <= k; ++b) {
                BigInt narayana =
                    (BigInt::binomial(k, b) * BigInt::binomial(k, b - 1)).divide_exact(BigInt(k));
                sum += RatPoly::monomial(Rational(narayana), b);
            }
            return sum;
        default:
            return std::nullopt;
    }
}

} // namespace

std::vector<RatPoly> moments_poly(const LawSpec& law, int up_to) {
    if (up_to > kMomentOrderCap) {
        // only the counted families reach past the enumeration budget
        std::vector<RatPoly> out;
        if (up_to > static_cast<int>(kSeriesMomentCap))
            throw CapacityError("moments: order over cap");
        for (int k = 1; k <= up_to; ++k) {
            auto m = counted_moment(law, k);
            if (!m) throw CapacityError("moments: order over cap for this law");
            out.push_back(std::move(*m));
        }
        return out;
    }
    std::vector<RatPoly> out;
    switch (law.family) {
        case LawFamily::Dirac: {
            for (int k = 1; k <= up_to; ++k)
                out.push_back(RatPoly(Rational::pow(law.c, static_cast<uint64_t>(k))));
            return out;
        }
        case LawFamily::CompoundPoisson: {
            // classical cumulants are the moments of the intensity measure:
            // k_n = sum_i w_i z_i^n, rescaled by t symbolically
            std::vector<RatPoly> cums;
            for (int n = 1; n <= up_to; ++n) {
                Rational kn;
                for (const auto& [w, z] : law.atoms)
                    kn += w * Rational::pow(z, static_cast<uint64_t>(n));
                cums.push_back(RatPoly(kn));
            }
            return cumulants_to_moments_classical(cums);
        }
        case LawFamily::Arcsine: {
            for (int k = 1; k <= up_to; ++k)
                out.push_back(RatPoly(Rational(BigInt::binomial(2 * k, k))));
            return out;
        }
        case LawFamily::ModifiedArcsine: {
            for (int k = 1; k <= up_to; ++k)
                out.push_back(RatPoly(Rational(BigInt::binomial(k, k / 2))));
            return out;
        }
        default: {
            for (int k = 1; k <= up_to; ++k)
                out.push_back(colored_moment_poly(law, uncolored_word(k)));
            return out;
        }
    }
}

std::vector<Rational> moments(const LawSpec& law, int up_to) {
    std::vector<Rational> out;
    for (const auto& p : moments_poly(law, up_to)) out.push_back(p.evaluate(law.t));
    return out;
}

std::vector<AtomMass> density_atoms(const LawSpec& law) {
    if (law.family == LawFamily::MarchenkoPastur && law.t < Rational(1))
        return {{Rational(0), Rational(1) - law.t}};
    if (law.family == LawFamily::Dirac) return {{law.c, Rational(1)}};
    return {};
}

std::pair<double, double> density_support(const LawSpec& law) {
    double t = law.t.to_double();
    switch (law.family) {
        case LawFamily::Gaussian:
            return {-1e9, 1e9};
        case LawFamily::Semicircle:
            return {-2 * std::sqrt(t), 2 * std::sqrt(t)};
        case LawFamily::MarchenkoPastur: {
            double r = std::sqrt(t);
            return {(1 - r) * (1 - r), (1 + r) * (1 + r)};
        }
        case LawFamily::Arcsine:
            return {0, 4};
        case LawFamily::ModifiedArcsine:
            return {-2, 2};
        default:
            throw DomainError("density: no closed form for this law");
    }
}

double density(const LawSpec& law, double x) {
    static const double pi = std::acos(-1.0);
    double t = law.t.to_double();
    switch (law.family) {
        case LawFamily::Gaussian:
            return std::exp(-x * x / (2 * t)) / std::sqrt(2 * pi * t);
        case LawFamily::Semicircle: {
            double r2 = 4 * t - x * x;
            return r2 <= 0 ? 0.0 : std::sqrt(r2) / (2 * pi * t);
        }
        case LawFamily::MarchenkoPastur: {
            auto [lo, hi] = density_support(law);
            if (x <= lo || x >= hi || x <= 0) return 0.0;
            double r2 = (hi - x) * (x - lo);
            return std::sqrt(r2) / (2 * pi * x);
        }
        case LawFamily::Arcsine: {
            if (x <= 0 || x >= 4) return 0.0;
            return 1.0 / (pi * std::sqrt(x * (4 - x)));
        }
        case LawFamily::ModifiedArcsine: {
            if (x <= -2 || x >= 2) return 0.0;
            return std::sqrt((2 + x) / (2 - x)) / (2 * pi);
        }
        default:
            throw DomainError("density: no closed form for this law");
    }
}

double bessel_pmf(int s, double t, int64_t atom) {
    if (s == 1) {
        if (atom < 0) return 0.0;
        double logp = -t + atom * std::log(t) - std::lgamma(double(atom) + 1);
        return std::exp(logp);
    }
    if (s != 2) throw DomainError("bessel_pmf: closed series for s in {1, 2} only");
    int64_t k = atom < 0 ? -atom : atom;
    // e^{-t} sum_p (t/2)^{k+2p} / ((k+p)! p!)
    double half = t / 2;
    double term = std::pow(half, double(k)) / std::tgamma(double(k) + 1);
    double sum = term;
    for (int p = 1; p < 400; ++p) {
        term *= half * half / (double(k + p) * double(p));
        sum += term;
        // ratio of consecutive terms is below 1/2 once p is large enough,
        // so the tail is below twice the next term
        if (p > half && term * 2 < 1e-13) break;
    }
    return std::exp(-t) * sum;
}

JacobiCoefficients jacobi_coefficients(const std::vector<Rational>& m) {
    if (m.size() > kSeriesMomentCap) throw CapacityError("stieltjes: too many moments");
    // moment functional on polynomial coefficient vectors
    auto L = [&](const std::vector<Rational>& coeffs) {
        Rational v;
        for (size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            if (j == 0) v += coeffs[0];
            else if (j <= m.size()) v += coeffs[j] * m[j - 1];
            else throw CapacityError("stieltjes: moment order exhausted");
        }
        return v;
    };
    auto shift = [](const std::vector<Rational>& c) {  // multiply by x
        std::vector<Rational> r(c.size() + 1, Rational(0));
        for (size_t j = 0; j < c.size(); ++j) r[j + 1] = c[j];
        return r;
    };
    auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };

    JacobiCoefficients jc;
    std::vector<Rational> prev;           // p_{-1} = 0
    std::vector<Rational> cur{Rational(1)};
    Rational norm_cur(1);                 // L[p_k^2]
    size_t max_level = m.size() / 2;
    for (size_t k = 0; k < max_level; ++k) {
        // a_k = L[x p_k^2] / L[p_k^2] needs moment 2k+1
        if (2 * k + 1 > m.size()) break;
        Rational ak = L(shift(mul(cur, cur))) / norm_cur;
        jc.a.push_back(ak);
        // p_{k+1} = (x - a_k) p_k - b_k^2 p_{k-1}
        std::vector<Rational> next = shift(cur);
        for (size_t j = 0; j < cur.size(); ++j) next[j] -= ak * cur[j];
        if (!prev.empty()) {
            const Rational& b2 = jc.b2.back();
            for (size_t j = 0; j < prev.size(); ++j) next[j] -= b2 * prev[j];
        }
        if (2 * (k + 1) > m.size()) break;
        Rational norm_next = L(mul(next, next));
        if (norm_next.is_zero()) break;  // finitely supported measure
        jc.b2.push_back(norm_next / norm_cur);
        prev = std::move(cur);
        cur = std::move(next);
        norm_cur = norm_next;
    }
    return jc;
}

double stieltjes_invert(const std::vector<Rational>& moments, double x, double eps) {
    if (eps <= 0) throw DomainError("stieltjes: eps must be positive");
    JacobiCoefficients jc = jacobi_coefficients(moments);
    std::complex<double> z(x, eps);
    size_t A = jc.a.size(), B = jc.b2.size();
    if (A == 0) return 0.0;

    // With G_k = 1/(z - a_k - b_{k+1}^2 G_{k+1}), close the fraction at the
    // deepest known level by the self-similar square-root tail built from the
    // last settled coefficients; a truncated measure (early b^2 = 0 stop) is
    // already exact with a zero tail.
    std::complex<double> g(0, 0);
    size_t start = A;
    double tb2 = B ? jc.b2.back().to_double() : 0.0;
    if (B + 1 >= A && tb2 > 1e-12) {
        double ta = jc.a.back().to_double();
        std::complex<double> zz = z - ta;
        std::complex<double> disc = std::sqrt(zz * zz - 4.0 * tb2);
        std::complex<double> w1 = (zz - disc) / (2.0 * tb2);
        std::complex<double> w2 = (zz + disc) / (2.0 * tb2);
        g = (w1.imag() <= w2.imag()) ? w1 : w2;  // Herglotz branch, Im G < 0
        start = (B >= A) ? A : A - 1;            // g approximates G_start
    }
    for (size_t k = start; k-- > 0;) {
        std::complex<double> tail =
            (k < B) ? jc.b2[k].to_double() * g : std::complex<double>(0, 0);
        g = 1.0 / (z - jc.a[k].to_double() - tail);
    }
    static const double pi = std::acos(-1.0);
    return -g.imag() / pi;
}

} // namespace easygram
