#pragma once

#include "easygram/categories.hpp"
#include "easygram/cumulants.hpp"
#include "easygram/gram.hpp"
#include "easygram/partition.hpp"
#include "easygram/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace easygram {

enum class LawFamily {
    Poisson,          // block sums over all partitions
    BesselReal,       // even blocks
    Bessel,           // phase-balanced blocks, colored; parameter s
    Gaussian,         // pairings
    ComplexGaussian,  // matching pairings, colored
    Semicircle,       // noncrossing pairings
    Circular,         // noncrossing matching pairings, colored
    MarchenkoPastur,  // noncrossing partitions
    FreeBessel,       // noncrossing phase-balanced, colored; parameter s
    FreeBesselReal,   // noncrossing even blocks
    Arcsine,          // density/moment forms only
    ModifiedArcsine,  // density/moment forms only
    Dirac,
    CompoundPoisson,
};

struct LawSpec {
    LawFamily family = LawFamily::Poisson;
    Rational t = Rational(1);
    int s = 2;            // Bessel level
    Rational c;           // Dirac position
    std::vector<std::pair<Rational, Rational>> atoms;  // (weight, location)

    static LawSpec poisson(Rational t) { return {LawFamily::Poisson, std::move(t), 2, {}, {}}; }
    static LawSpec gaussian(Rational t) { return {LawFamily::Gaussian, std::move(t), 2, {}, {}}; }
    static LawSpec semicircle(Rational t) {
        return {LawFamily::Semicircle, std::move(t), 2, {}, {}};
    }
    static LawSpec marchenko_pastur(Rational t) {
        return {LawFamily::MarchenkoPastur, std::move(t), 2, {}, {}};
    }
    static LawSpec bessel_real(Rational t) {
        return {LawFamily::BesselReal, std::move(t), 2, {}, {}};
    }
    static LawSpec dirac(Rational c) {
        return {LawFamily::Dirac, Rational(1), 2, std::move(c), {}};
    }

    // the partition family whose block sums give the moments, when one exists
    std::optional<CategoryId> category() const;
};

LawFamily law_family_from_token(const std::string& token);

inline constexpr int kMomentOrderCap = 12;
// the Stieltjes path accepts longer inputs
inline constexpr int kSeriesMomentCap = 80;

// moments M_1..M_k as polynomials in the parameter t (Dirac gives constants)
std::vector<RatPoly> moments_poly(const LawSpec& law, int up_to);
// same, evaluated at the law's parameter
std::vector<Rational> moments(const LawSpec& law, int up_to);

// moment over one colored word, for the complex laws; polynomial in t
RatPoly colored_moment_poly(const LawSpec& law, const ColoredWord& word);

// exact moments of sum_i z_i alpha_i with alpha_i independent Poisson of
// rate w_i, over any commutative ring (Touchard expansion + multinomials)
template <class R>
std::vector<R> compound_poisson_moments(const std::vector<std::pair<R, R>>& atoms, int up_to);

// colored moment E[a^{#white} conj(a)^{#black}] of the same sum; conjugate
// locations supplied by the caller
template <class R>
R compound_poisson_colored_moment(const std::vector<R>& weights, const std::vector<R>& locations,
                                  const std::vector<R>& conj_locations, int whites, int blacks);

// ---- densities ----

struct AtomMass {
    Rational position;
    Rational mass;
};

// point masses carried by the law (e.g. the origin mass of the free Poisson
// law below rate one)
std::vector<AtomMass> density_atoms(const LawSpec& law);
// absolutely continuous density at x; zero outside the support
double density(const LawSpec& law, double x);
// support of the absolutely continuous part
std::pair<double, double> density_support(const LawSpec& law);

// probability at an integer atom of the level-s Bessel law, s in {1, 2};
// series evaluation with truncation error below 1e-12
double bessel_pmf(int s, double t, int64_t atom);

// ---- Stieltjes inversion from moments ----

struct JacobiCoefficients {
    std::vector<Rational> a;    // diagonal recurrence terms
    std::vector<Rational> b2;   // squared off-diagonal terms, b2[0] = b_1^2
};

// three-term recurrence data of the orthogonal polynomials of the moment
// functional; stops early when the measure has finite support
JacobiCoefficients jacobi_coefficients(const std::vector<Rational>& moments);

// -(1/pi) Im G(x + i eps), with G evaluated through the continued fraction
// of the moment sequence, closed by its square-root tail
double stieltjes_invert(const std::vector<Rational>& moments, double x, double eps);

// ---- template implementations ----

template <class R>
R compound_poisson_colored_moment(const std::vector<R>& weights, const std::vector<R>& locations,
                                  const std::vector<R>& conj_locations, int whites, int blacks) {
    size_t s = weights.size();
    if (locations.size() != s || conj_locations.size() != s)
        throw ShapeError("compound poisson: atom lists disagree");
    // iterate compositions of whites and blacks into s parts
    std::vector<int> mw(s, 0), mb(s, 0);
    R total(0);
    std::function<void(size_t, int)> rec_b = [&](size_t i, int left) {
        if (i + 1 == s) {
            mb[i] = left;
        } else {
            for (int v = 0; v <= left; ++v) {
                mb[i] = v;
                rec_b(i + 1, left - v);
            }
            return;
        }
        // multinomial coefficients and the Touchard factors
        R term(1);
        {
            BigInt mult = BigInt::factorial(static_cast<uint64_t>(whites));
            for (size_t j = 0; j < s; ++j)
                mult = mult.divide_exact(BigInt::factorial(static_cast<uint64_t>(mw[j])));
            BigInt multb = BigInt::factorial(static_cast<uint64_t>(blacks));
            for (size_t j = 0; j < s; ++j)
                multb = multb.divide_exact(BigInt::factorial(static_cast<uint64_t>(mb[j])));
            term = term * ring_cast<R>(mult) * ring_cast<R>(multb);
        }
        for (size_t j = 0; j < s; ++j) {
            for (int e = 0; e < mw[j]; ++e) term = term * locations[j];
            for (int e = 0; e < mb[j]; ++e) term = term * conj_locations[j];
            int m = mw[j] + mb[j];
            // E[alpha^m] = sum_b S(m, b) w^b
            R touchard(m == 0 ? 1 : 0);
            R wpow(1);
            for (int b = 1; b <= m; ++b) {
                wpow = wpow * weights[j];
                touchard = touchard + ring_cast<R>(stirling2(m, b)) * wpow;
            }
            term = term * touchard;
        }
        total = total + term;
    };
    std::function<void(size_t, int)> rec_w = [&](size_t i, int left) {
        if (i + 1 == s) {
            mw[i] = left;
            rec_b(0, blacks);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            mw[i] = v;
            rec_w(i + 1, left - v);
        }
    };
    if (s == 0) return R(whites + blacks == 0 ? 1 : 0);
    rec_w(0, whites);
    return total;
}

template <class R>
std::vector<R> compound_poisson_moments(const std::vector<std::pair<R, R>>& atoms, int up_to) {
    if (up_to > kMomentOrderCap) throw CapacityError("compound poisson: order over cap");
    std::vector<R> weights, locations;
    for (const auto& [w, z] : atoms) {
        weights.push_back(w);
        locations.push_back(z);
    }
    std::vector<R> out;
    for (int k = 1; k <= up_to; ++k)
        out.push_back(
            compound_poisson_colored_moment(weights, locations, locations, k, 0));
    return out;
}

} // namespace easygram
