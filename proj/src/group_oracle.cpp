#include "easygram/group_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace easygram {

BigInt GroupSpec::order() const {
    switch (family) {
        case GroupFamily::Cyclic: return BigInt(n);
        case GroupFamily::Dihedral: return BigInt(2 * int64_t(n));
        case GroupFamily::Symmetric: return BigInt::factorial(n);
        case GroupFamily::Alternating:
            return n < 2 ? BigInt(1) : BigInt::factorial(n).divide_exact(BigInt(2));
        case GroupFamily::Hyperoctahedral:
            return BigInt::pow(BigInt(2), n) * BigInt::factorial(n);
        case GroupFamily::ComplexReflection:
            return BigInt::pow(BigInt(s), n) * BigInt::factorial(n);
    }
    return BigInt(0);
}

std::string GroupSpec::name() const {
    switch (family) {
        case GroupFamily::Cyclic: return "Z_" + std::to_string(n);
        case GroupFamily::Dihedral: return "D_" + std::to_string(n);
        case GroupFamily::Symmetric: return "S_" + std::to_string(n);
        case GroupFamily::Alternating: return "A_" + std::to_string(n);
        case GroupFamily::Hyperoctahedral: return "H_" + std::to_string(n);
        case GroupFamily::ComplexReflection:
            return "H(" + std::to_string(n) + "," + std::to_string(s) + ")";
    }
    return "?";
}

Cyclotomic GenPermMatrix::trace(int s) const {
    Cyclotomic t = Cyclotomic::zero(s);
    for (size_t j = 0; j < sigma.size(); ++j)
        if (sigma[j] == static_cast<int>(j)) t += Cyclotomic::root_power(s, phase[j]);
    return t;
}

namespace {

bool permutation_parity_even(const std::vector<int>& sigma) {
    std::vector<char> seen(sigma.size(), 0);
    int transpositions = 0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = static_cast<int>(i); !seen[j]; j = sigma[j]) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

std::vector<GenPermMatrix> enumerate_group(const GroupSpec& g) {
    BigInt size = g.order();
    if (size > BigInt(kGroupOrderCap)) throw CapacityError("group over the enumeration cap");
    int n = g.n;
    std::vector<GenPermMatrix> out;

    switch (g.family) {
        case GroupFamily::Cyclic: {
            // rotations i -> i + k, sorted lexicographically by image vector
            std::vector<GenPermMatrix> rots;
            for (int k = 0; k < n; ++k) {
                GenPermMatrix m;
                m.sigma.resize(n);
                m.phase.assign(n, 0);
                for (int i = 0; i < n; ++i) m.sigma[i] = (i + k) % n;
                rots.push_back(std::move(m));
            }
            std::sort(rots.begin(), rots.end(),
                      [](const GenPermMatrix& a, const GenPermMatrix& b) { return a.sigma < b.sigma; });
            return rots;
        }
        case GroupFamily::Dihedral: {
            std::vector<GenPermMatrix> elems;
            for (int k = 0; k < n; ++k) {
                GenPermMatrix rot, sym;
                rot.sigma.resize(n);
                rot.phase.assign(n, 0);
                sym.sigma.resize(n);
                sym.phase.assign(n, 0);
                for (int i = 0; i < n; ++i) {
                    rot.sigma[i] = (i + k) % n;
                    sym.sigma[i] = ((k - i) % n + n) % n;
                }
                elems.push_back(std::move(rot));
                elems.push_back(std::move(sym));
            }
            std::sort(elems.begin(), elems.end(),
                      [](const GenPermMatrix& a, const GenPermMatrix& b) { return a.sigma < b.sigma; });
            elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
            return elems;
        }
        case GroupFamily::Symmetric:
        case GroupFamily::Alternating: {
            for (const auto& p : all_permutations(n)) {
                if (g.family == GroupFamily::Alternating && !permutation_parity_even(p)) continue;
                GenPermMatrix m;
                m.sigma = p;
                m.phase.assign(n, 0);
                out.push_back(std::move(m));
            }
            return out;
        }
        case GroupFamily::Hyperoctahedral:
        case GroupFamily::ComplexReflection: {
            int s = g.phase_order();
            int64_t phase_count = 1;
            for (int i = 0; i < n; ++i) phase_count *= s;
            for (const auto& p : all_permutations(n)) {
                for (int64_t code = 0; code < phase_count; ++code) {
                    GenPermMatrix m;
                    m.sigma = p;
                    m.phase.resize(n);
                    int64_t c = code;
                    // lexicographic phase vectors: leftmost position most significant
                    for (int i = n - 1; i >= 0; --i) {
                        m.phase[i] = static_cast<int>(c % s);
                        c /= s;
                    }
                    out.push_back(std::move(m));
                }
            }
            return out;
        }
    }
    return out;
}

DiscreteLaw make_law(std::vector<std::pair<Cyclotomic, Rational>> weighted) {
    std::map<Cyclotomic, Rational> acc;
    for (auto& [v, p] : weighted) acc[v] += p;
    DiscreteLaw law;
    Rational total;
    for (auto& [v, p] : acc) {
        if (p.is_zero()) continue;
        total += p;
        law.atoms.push_back({v, p});
    }
    if (total != Rational(1)) throw std::logic_error("law: probabilities do not sum to 1");
    return law;
}

Rational DiscreteLaw::probability_of(const Rational& v) const {
    for (const auto& a : atoms)
        if (a.value.is_rational() && a.value.rational_value() == v) return a.probability;
    return Rational(0);
}

bool DiscreteLaw::operator==(const DiscreteLaw& o) const {
    if (atoms.size() != o.atoms.size()) return false;
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].value != o.atoms[i].value || atoms[i].probability != o.atoms[i].probability)
            return false;
    return true;
}

DiscreteLaw character_law(const GroupSpec& g) {
    int s = g.phase_order();
    auto elems = enumerate_group(g);
    Rational weight(BigInt(1), BigInt(static_cast<int64_t>(elems.size())));
    std::vector<std::pair<Cyclotomic, Rational>> weighted;
    weighted.reserve(elems.size());
    for (const auto& m : elems) weighted.emplace_back(m.trace(s), weight);
    return make_law(std::move(weighted));
}

DiscreteLaw truncated_character_law(const GroupSpec& g, int cutoff) {
    if (g.family != GroupFamily::Symmetric)
        throw DomainError("truncated character law: symmetric family only");
    if (cutoff < 1 || cutoff > g.n) throw DomainError("truncated law: need 1 <= s <= N");
    auto elems = enumerate_group(g);
    Rational weight(BigInt(1), BigInt(static_cast<int64_t>(elems.size())));
    std::vector<std::pair<Cyclotomic, Rational>> weighted;
    for (const auto& m : elems) {
        int fixed = 0;
        for (int i = 0; i < cutoff; ++i)
            if (m.sigma[i] == i) ++fixed;
        weighted.emplace_back(Cyclotomic(1, Rational(fixed)), weight);
    }
    DiscreteLaw law = make_law(std::move(weighted));
    if (!(law == symmetric_truncated_law_closed(g.n, cutoff)))
        throw std::logic_error("truncated law: enumeration and closed form disagree");
    return law;
}

DiscreteLaw cyclic_character_law_closed(int n) {
    std::vector<std::pair<Cyclotomic, Rational>> w;
    w.emplace_back(Cyclotomic(1, Rational(0)), Rational(n - 1, n));
    w.emplace_back(Cyclotomic(1, Rational(n)), Rational(1, n));
    return make_law(std::move(w));
}

DiscreteLaw dihedral_character_law_closed(int n) {
    std::vector<std::pair<Cyclotomic, Rational>> w;
    if (n % 2 == 0) {
        w.emplace_back(Cyclotomic(1, Rational(0)),
                       Rational(3, 4) - Rational(1, 2 * int64_t(n)));
        w.emplace_back(Cyclotomic(1, Rational(2)), Rational(1, 4));
    } else {
        w.emplace_back(Cyclotomic(1, Rational(0)),
                       Rational(1, 2) - Rational(1, 2 * int64_t(n)));
        w.emplace_back(Cyclotomic(1, Rational(1)), Rational(1, 2));
    }
    w.emplace_back(Cyclotomic(1, Rational(n)), Rational(1, 2 * int64_t(n)));
    return make_law(std::move(w));
}

DiscreteLaw symmetric_character_law_closed(int n) {
    // P(chi = k) = (1/k!) sum_{j=0}^{n-k} (-1)^j / j!
    std::vector<std::pair<Cyclotomic, Rational>> w;
    for (int k = 0; k <= n; ++k) {
        Rational sum;
        for (int j = 0; j <= n - k; ++j) {
            Rational term(BigInt(1), BigInt::factorial(j));
            sum += (j % 2) ? -term : term;
        }
        Rational p = sum / Rational(BigInt::factorial(k));
        if (!p.is_zero()) w.emplace_back(Cyclotomic(1, Rational(k)), p);
    }
    return make_law(std::move(w));
}

DiscreteLaw symmetric_truncated_law_closed(int n, int cutoff) {
    // (s!/N!) sum_p (N-p)!/(s-p)! (delta_1 - delta_0)^{*p} / p!
    std::vector<Rational> mass(cutoff + 1, Rational(0));
    Rational front(BigInt::factorial(cutoff), BigInt::factorial(n));
    for (int p = 0; p <= cutoff; ++p) {
        Rational coeff = front * Rational(BigInt::factorial(n - p),
                                          BigInt::factorial(cutoff - p) * BigInt::factorial(p));
        // (delta_1 - delta_0)^{*p} = sum_j (-1)^{p-j} C(p,j) delta_j
        for (int j = 0; j <= p; ++j) {
            Rational term = coeff * Rational(BigInt::binomial(p, j));
            mass[j] += ((p - j) % 2) ? -term : term;
        }
    }
    std::vector<std::pair<Cyclotomic, Rational>> w;
    for (int j = 0; j <= cutoff; ++j)
        if (!mass[j].is_zero()) w.emplace_back(Cyclotomic(1, Rational(j)), mass[j]);
    return make_law(std::move(w));
}

Cyclotomic integrate_exact(const GroupSpec& g, const ColoredWord& exponents,
                           const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != exponents.size() || cols.size() != exponents.size())
        throw ShapeError("integrate: index tuples must match the exponent word");
    int s = g.phase_order();
    auto elems = enumerate_group(g);
    // accumulate counts per phase exponent, then a single cyclotomic sum
    std::vector<BigInt> counts(static_cast<size_t>(s), BigInt(0));
    for (const auto& m : elems) {
        int total_phase = 0;
        bool vanishes = false;
        for (size_t t = 0; t < exponents.size(); ++t) {
            int e = m.entry_exponent(rows[t] - 1, cols[t] - 1);
            if (e < 0) {
                vanishes = true;
                break;
            }
            total_phase += (exponents[t] == Color::White) ? e : -e;
        }
        if (!vanishes) counts[((total_phase % s) + s) % s] += BigInt(1);
    }
    Cyclotomic total = Cyclotomic::zero(s);
    Rational inv(BigInt(1), BigInt(static_cast<int64_t>(elems.size())));
    for (int e = 0; e < s; ++e) {
        if (counts[e].is_zero()) continue;
        Cyclotomic term = Cyclotomic::root_power(s, e);
        term *= Rational(counts[e]) * inv;
        total += term;
    }
    return total;
}

BigInt fix_dim(const GroupSpec& g, const ColoredWord& word) {
    int s = g.phase_order();
    auto elems = enumerate_group(g);
    Cyclotomic total = Cyclotomic::zero(s);
    for (const auto& m : elems) {
        Cyclotomic tr = m.trace(s);
        Cyclotomic trbar = tr.conjugate();
        Cyclotomic prod(s, Rational(1));
        for (Color c : word) prod *= (c == Color::White ? tr : trbar);
        total += prod;
    }
    Cyclotomic avg = total;
    avg *= Rational(BigInt(1), BigInt(static_cast<int64_t>(elems.size())));
    if (!avg.is_rational()) throw std::logic_error("fix_dim: irrational average");
    Rational v = avg.rational_value();
    if (!v.is_integer() || v.sign() < 0)
        throw std::logic_error("fix_dim: average is not a nonnegative integer");
    return v.num();
}

bool is_fixed_vector_exact(const Partition& one_row, const GenPermMatrix& g, int phase_order) {
    if (!one_row.is_one_row()) throw ShapeError("fixed vector: one-row partition required");
    int n = static_cast<int>(g.sigma.size());
    size_t k = one_row.lower_size();
    // inverse permutation for the pullback of indices
    std::vector<int> inv(n);
    for (int j = 0; j < n; ++j) inv[g.sigma[j]] = j;
    std::vector<int> idx(k, 1), pulled(k);
    auto delta = [&](const std::vector<int>& tuple) {
        for (const auto& block : one_row.blocks()) {
            int v = tuple[block[0]];
            for (int leg : block)
                if (tuple[leg] != v) return false;
        }
        return true;
    };
    while (true) {
        // (g^{(x)k} xi)_j = delta(sigma^{-1} j) * prod_m zeta^{+-
        // phase(sigma^{-1} j_m)}, compared against delta(j)
        int total_phase = 0;
        for (size_t m = 0; m < k; ++m) {
            pulled[m] = inv[idx[m] - 1] + 1;
            int e = g.phase[pulled[m] - 1];
            total_phase += one_row.lower()[m] == Color::White ? e : -e;
        }
        bool lhs_nonzero = delta(pulled);
        bool rhs_nonzero = delta(idx);
        if (lhs_nonzero != rhs_nonzero) return false;
        if (lhs_nonzero) {
            Cyclotomic ph = Cyclotomic::root_power(phase_order, total_phase);
            if (!(ph == Cyclotomic(1))) return false;
        }
        size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n) idx[--pos] = 1;
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    return true;
}

} // namespace easygram
