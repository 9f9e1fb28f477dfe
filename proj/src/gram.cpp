#include "easygram/gram.hpp"

#include <algorithm>
#include <functional>

namespace easygram {

std::vector<YoungDiagram> young_diagrams(int n) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back({cur});
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt standard_tableaux_count(const YoungDiagram& lambda) {
    int n = lambda.size();
    if (n == 0) return BigInt(1);
    // hook length of cell (i, j): arm + leg + 1
    BigInt hooks(1);
    int nrows = static_cast<int>(lambda.rows.size());
    for (int i = 0; i < nrows; ++i) {
        for (int j = 0; j < lambda.rows[i]; ++j) {
            int arm = lambda.rows[i] - j - 1;
            int leg = 0;
            for (int r = i + 1; r < nrows; ++r)
                if (lambda.rows[r] > j) ++leg;
            hooks *= BigInt(arm + leg + 1);
        }
    }
    return BigInt::factorial(static_cast<uint64_t>(n)).divide_exact(hooks);
}

BigInt standard_tableaux_count_brute(const YoungDiagram& lambda) {
    int n = lambda.size();
    if (n == 0) return BigInt(1);
    int nrows = static_cast<int>(lambda.rows.size());
    std::vector<int> fill(nrows, 0);  // cells filled so far per row
    int64_t count = 0;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            ++count;
            return;
        }
        for (int i = 0; i < nrows; ++i) {
            if (fill[i] >= lambda.rows[i]) continue;
            if (i > 0 && fill[i - 1] <= fill[i]) continue;  // column must increase
            ++fill[i];
            rec(next + 1);
            --fill[i];
        }
    };
    rec(1);
    return BigInt(count);
}

ExactMatrix gram_matrix(const CategoryId& cat, const ColoredWord& word, int N) {
    if (N < 1) throw DomainError("gram: N >= 1 required");
    std::vector<Partition> mem = members(cat, word);
    if (mem.size() > kGramMemberBudget) throw CapacityError("gram: member list over budget");
    size_t n = mem.size();
    ExactMatrix g(n, n);
    for (size_t i = 0; i < n; ++i) {
        g.at(i, i) = Rational(BigInt::pow(BigInt(N), mem[i].num_blocks()));
        for (size_t j = i + 1; j < n; ++j) {
            Rational v(BigInt::pow(BigInt(N), join(mem[i], mem[j]).num_blocks()));
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    }
    g.set_index(std::move(mem));
    return g;
}

BigInt gram_det_direct(const CategoryId& cat, const ColoredWord& word, int N) {
    if (N < 1) throw DomainError("gram: N >= 1 required");
    std::vector<Partition> mem = members(cat, word);
    if (mem.size() > kGramMemberBudget) throw CapacityError("gram: member list over budget");
    size_t n = mem.size();
    std::vector<std::vector<BigInt>> g(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i) {
        g[i][i] = BigInt::pow(BigInt(N), mem[i].num_blocks());
        for (size_t j = i + 1; j < n; ++j) {
            BigInt v = BigInt::pow(BigInt(N), join(mem[i], mem[j]).num_blocks());
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    return bareiss_determinant(std::move(g));
}

IntPoly gram_det_direct_symbolic(const CategoryId& cat, const ColoredWord& word) {
    std::vector<Partition> mem = members(cat, word);
    if (mem.size() > 15) throw CapacityError("gram: symbolic determinant limited to 15x15");
    size_t n = mem.size();
    std::vector<std::vector<IntPoly>> g(n, std::vector<IntPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            g[i][j] = IntPoly::monomial(BigInt(1), join(mem[i], mem[j]).num_blocks());
    return bareiss_determinant(std::move(g));
}

namespace {

void require_lattice_family(const CategoryId& cat) {
    if (cat.family != CategoryFamily::P && cat.family != CategoryFamily::P_even)
        throw DomainError("lindstrom: defined for the full and even-block lattices");
}

} // namespace

BigInt lindstrom_det(const CategoryId& cat, int k, int N) {
    require_lattice_family(cat);
    BigInt det(1);
    for (const auto& pi : members(cat, uncolored_word(k))) {
        if (static_cast<int>(pi.num_blocks()) > N) return BigInt(0);
        det *= BigInt::falling(BigInt(N), pi.num_blocks());
    }
    return det;
}

IntPoly lindstrom_det_symbolic(const CategoryId& cat, int k) {
    require_lattice_family(cat);
    IntPoly det(1);
    IntPoly X = IntPoly::variable();
    for (const auto& pi : members(cat, uncolored_word(k))) {
        IntPoly f(1);
        for (size_t b = 0; b < pi.num_blocks(); ++b)
            f *= X - IntPoly(static_cast<int64_t>(b));
        det *= f;
    }
    return det;
}

namespace {

// product over cells of (N + 2j - i - shift), 1-based cells
IntPoly content_product(const YoungDiagram& lambda, int shift) {
    IntPoly f(1);
    IntPoly X = IntPoly::variable();
    for (int i = 1; i <= static_cast<int>(lambda.rows.size()); ++i)
        for (int j = 1; j <= lambda.rows[i - 1]; ++j)
            f *= X + IntPoly(static_cast<int64_t>(2 * j - i - shift));
    return f;
}

} // namespace

IntPoly on_det_symbolic(int k) {
    if (k % 2) throw DomainError("orthogonal Gram determinant: k must be even");
    IntPoly det(1);
    for (const auto& lambda : young_diagrams(k / 2)) {
        BigInt expo = standard_tableaux_count(lambda.doubled());
        if (!expo.fits_int64()) throw CapacityError("on_det: exponent too large");
        det *= IntPoly::pow(content_product(lambda, 1),
                            static_cast<uint64_t>(expo.to_int64()));
    }
    return det;
}

BigInt on_det(int k, int N) {
    if (k % 2) throw DomainError("orthogonal Gram determinant: k must be even");
    BigInt det(1);
    for (const auto& lambda : young_diagrams(k / 2)) {
        BigInt expo = standard_tableaux_count(lambda.doubled());
        BigInt base(1);
        for (int i = 1; i <= static_cast<int>(lambda.rows.size()); ++i)
            for (int j = 1; j <= lambda.rows[i - 1]; ++j)
                base *= BigInt(N + 2 * j - i - 1);
        det *= BigInt::pow(base, static_cast<uint64_t>(expo.to_int64()));
    }
    return det;
}

BigInt exponent_sum_a(const CategoryId& cat, int k) {
    BigInt a(0);
    for (const auto& pi : members(cat, uncolored_word(k)))
        a += BigInt(2 * static_cast<int64_t>(pi.num_blocks()) - k);
    return a;
}

IntPoly bn_det_symbolic(int k) {
    BigInt a = exponent_sum_a(CategoryId::of(CategoryFamily::P12), k);
    IntPoly det = IntPoly::pow(IntPoly::variable(), static_cast<uint64_t>(a.to_int64()));
    for (int m = 1; 2 * m <= k; ++m) {
        for (const auto& lambda : young_diagrams(m)) {
            BigInt expo = BigInt::binomial(k, 2 * m) * standard_tableaux_count(lambda.doubled());
            det *= IntPoly::pow(content_product(lambda, 2),
                                static_cast<uint64_t>(expo.to_int64()));
        }
    }
    return det;
}

BigInt bn_det(int k, int N) {
    return bn_det_symbolic(k).evaluate(BigInt(N));
}

std::pair<BigInt, BigInt> binomial_exponents(int k, int r) {
    auto f = [&](int kk, int rr) -> BigInt {
        // zero off the integer lattice and for negative lower entries
        if (kk < 0) return BigInt(0);
        BigInt first = (kk - rr >= 0) ? BigInt::binomial(2 * kk, kk - rr) : BigInt(0);
        BigInt second = (kk - rr - 1 >= 0) ? BigInt::binomial(2 * kk, kk - rr - 1) : BigInt(0);
        return first - second;
    };
    BigInt fkr = f(k, r);
    BigInt dkr = fkr - f(k, r + 1);
    return {fkr, dkr};
}

IntPoly chebyshev_like(int r) {
    IntPoly pm1(1), p = IntPoly::variable();
    if (r == 0) return pm1;
    for (int i = 1; i < r; ++i) {
        IntPoly next = IntPoly::variable() * p - pm1;
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

namespace {

// ballot-type exponents with the primed 3s-binomials used by the even-block
// noncrossing family
BigInt d_primed(int s, int r) {
    auto fp = [&](int ss, int rr) -> BigInt {
        if (ss < 0) return BigInt(0);
        BigInt first = (ss - rr >= 0) ? BigInt::binomial(3 * ss, ss - rr) : BigInt(0);
        BigInt second = (ss - rr - 1 >= 0) ? BigInt::binomial(3 * ss, ss - rr - 1) : BigInt(0);
        return first - second;
    };
    return fp(s, r) - fp(s, r + 1);
}

// maps a polynomial in X = sqrt(N) with only even powers to a polynomial in N
IntPoly collapse_sqrt(const IntPoly& in_x) {
    std::vector<BigInt> out((in_x.degree() / 2) + 1, BigInt(0));
    for (int e = 0; e <= in_x.degree(); ++e) {
        BigInt c = in_x.coeff(static_cast<size_t>(e));
        if (c.is_zero()) continue;
        if (e % 2)
            throw std::logic_error("meander determinant: odd power of sqrt(N) survived");
        out[e / 2] = c;
    }
    return IntPoly(std::move(out));
}

uint64_t to_exp(const BigInt& v) {
    if (v.is_negative() || !v.fits_int64()) throw CapacityError("exponent out of range");
    return static_cast<uint64_t>(v.to_int64());
}

} // namespace

IntPoly difrancesco_det_symbolic(const CategoryId& cat, int k) {
    switch (cat.family) {
        case CategoryFamily::NC2: {
            if (k % 2) return IntPoly(1);  // no pairings, empty matrix
            IntPoly det(1);
            for (int r = 1; r <= k / 2; ++r)
                det *= IntPoly::pow(chebyshev_like(r), to_exp(binomial_exponents(k / 2, r).second));
            return det;
        }
        case CategoryFamily::NC: {
            // polynomial in X = sqrt(N), collapsed at the end
            BigInt a = exponent_sum_a(cat, k);
            IntPoly in_x = IntPoly::pow(IntPoly::variable(), to_exp(a));
            for (int r = 1; r <= k; ++r)
                in_x *= IntPoly::pow(chebyshev_like(r), to_exp(binomial_exponents(k, r).second));
            return collapse_sqrt(in_x);
        }
        case CategoryFamily::NC12: {
            BigInt a = exponent_sum_a(cat, k);
            IntPoly det = IntPoly::pow(IntPoly::variable(), to_exp(a));
            IntPoly shifted = IntPoly::variable() - IntPoly(1);
            for (int r = 1; r <= k / 2; ++r) {
                BigInt expo(0);
                for (int l = r; l <= k / 2; ++l)
                    expo += BigInt::binomial(k, 2 * l) * binomial_exponents(l, r).second;
                det *= IntPoly::pow(chebyshev_like(r).compose(shifted), to_exp(expo));
            }
            return det;
        }
        case CategoryFamily::NC_even: {
            if (k % 2) throw DomainError("even-block meander determinant: k must be even");
            BigInt a = exponent_sum_a(cat, k);
            if (a.is_negative()) {
                // negative sqrt(N) exponent: multiply the product side instead
                IntPoly in_x(1);
                for (int r = 1; r <= k / 2; ++r)
                    in_x *= IntPoly::pow(chebyshev_like(r), 2 * to_exp(d_primed(k / 2, r)));
                // divide by X^{-a}: every surviving exponent must stay even
                int drop = static_cast<int>(to_exp(-a));
                std::vector<BigInt> shiftedc;
                for (int e = drop; e <= in_x.degree(); ++e)
                    shiftedc.push_back(in_x.coeff(static_cast<size_t>(e)));
                for (int e = 0; e < drop && e <= in_x.degree(); ++e)
                    if (!in_x.coeff(static_cast<size_t>(e)).is_zero())
                        throw std::logic_error("meander determinant: negative power of N");
                return collapse_sqrt(IntPoly(std::move(shiftedc)));
            }
            IntPoly in_x = IntPoly::pow(IntPoly::variable(), to_exp(a));
            for (int r = 1; r <= k / 2; ++r)
                in_x *= IntPoly::pow(chebyshev_like(r), 2 * to_exp(d_primed(k / 2, r)));
            return collapse_sqrt(in_x);
        }
        default:
            throw DomainError("meander determinant: defined for nc2, nc, nc12, nc_even");
    }
}

BigInt difrancesco_det(const CategoryId& cat, int k, int N) {
    return difrancesco_det_symbolic(cat, k).evaluate(BigInt(N));
}

bool delta_applies(const Partition& one_row, const std::vector<int>& idx) {
    for (const auto& block : one_row.blocks()) {
        int v = idx[block[0]];
        for (int leg : block)
            if (idx[leg] != v) return false;
    }
    return true;
}

ExactMatrix weingarten_matrix(const CategoryId& cat, const ColoredWord& word, int N) {
    return gram_matrix(cat, word, N).quasi_inverse();
}

Rational integrate_monomial(const CategoryId& cat, int N, const ColoredWord& exponents,
                            const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != exponents.size() || cols.size() != exponents.size())
        throw ShapeError("integrate: index tuples must match the exponent word");
    ExactMatrix w = weingarten_matrix(cat, exponents, N);
    const auto& mem = w.index();
    Rational total;
    for (size_t i = 0; i < mem.size(); ++i) {
        if (!delta_applies(mem[i], rows)) continue;
        for (size_t j = 0; j < mem.size(); ++j) {
            if (w.at(i, j).is_zero() || !delta_applies(mem[j], cols)) continue;
            total += w.at(i, j);
        }
    }
    return total;
}

Rational truncated_moment(const CategoryId& cat, int N, const ColoredWord& word, int s) {
    if (s < 1 || s > N) throw DomainError("truncated moment: need 1 <= s <= N");
    ExactMatrix w = weingarten_matrix(cat, word, N);
    ExactMatrix gs = gram_matrix(cat, word, s);
    return (w * gs).trace();
}

Rational asymptotic_moment(const CategoryId& cat, const ColoredWord& word, const Rational& t) {
    Rational total;
    for (const auto& pi : members(cat, word)) total += Rational::pow(t, pi.num_blocks());
    return total;
}

RatPoly asymptotic_moment_poly(const CategoryId& cat, const ColoredWord& word) {
    RatPoly total;
    for (const auto& pi : members(cat, word))
        total += RatPoly::monomial(Rational(1), pi.num_blocks());
    return total;
}

Rational sn_truncated_closed(int N, int s, int k) {
    if (s > N) throw DomainError("truncated moment: need s <= N");
    if (k == 0) return Rational(1);
    Rational total;
    for (int b = 1; b <= std::min(k, s); ++b) {
        Rational term(BigInt::falling(BigInt(s), static_cast<uint64_t>(b)) * stirling2(k, b),
                      BigInt::falling(BigInt(N), static_cast<uint64_t>(b)));
        total += term;
    }
    return total;
}

IntPoly FactoredDet::expanded() const {
    IntPoly p(1);
    for (const auto& [base, expo] : factors)
        p *= IntPoly::pow(base, static_cast<uint64_t>(expo.to_int64()));
    return p;
}

BigInt FactoredDet::evaluate(int N) const {
    BigInt v(1);
    for (const auto& [base, expo] : factors) {
        if (expo.is_negative()) throw DomainError("factored determinant: negative exponent");
        v *= BigInt::pow(base.evaluate(BigInt(N)), static_cast<uint64_t>(expo.to_int64()));
    }
    return v;
}

namespace {

void push_factor(FactoredDet& det, const IntPoly& base, const BigInt& expo) {
    if (expo.is_zero() || base == IntPoly(1)) return;
    for (auto& [b, e] : det.factors)
        if (b == base) {
            e += expo;
            return;
        }
    det.factors.emplace_back(base, expo);
}

} // namespace

FactoredDet lindstrom_factors(const CategoryId& cat, int k) {
    require_lattice_family(cat);
    FactoredDet det;
    IntPoly X = IntPoly::variable();
    for (const auto& pi : members(cat, uncolored_word(k)))
        for (size_t b = 0; b < pi.num_blocks(); ++b)
            push_factor(det, X - IntPoly(static_cast<int64_t>(b)), BigInt(1));
    return det;
}

FactoredDet on_factors(int k) {
    if (k % 2) throw DomainError("orthogonal Gram determinant: k must be even");
    FactoredDet det;
    IntPoly X = IntPoly::variable();
    for (const auto& lambda : young_diagrams(k / 2)) {
        BigInt expo = standard_tableaux_count(lambda.doubled());
        for (int i = 1; i <= static_cast<int>(lambda.rows.size()); ++i)
            for (int j = 1; j <= lambda.rows[i - 1]; ++j)
                push_factor(det, X + IntPoly(static_cast<int64_t>(2 * j - i - 1)), expo);
    }
    return det;
}

FactoredDet bn_factors(int k) {
    FactoredDet det;
    IntPoly X = IntPoly::variable();
    push_factor(det, X, exponent_sum_a(CategoryId::of(CategoryFamily::P12), k));
    for (int m = 1; 2 * m <= k; ++m)
        for (const auto& lambda : young_diagrams(m)) {
            BigInt expo = BigInt::binomial(k, 2 * m) * standard_tableaux_count(lambda.doubled());
            for (int i = 1; i <= static_cast<int>(lambda.rows.size()); ++i)
                for (int j = 1; j <= lambda.rows[i - 1]; ++j)
                    push_factor(det, X + IntPoly(static_cast<int64_t>(2 * j - i - 2)), expo);
        }
    return det;
}

namespace {

// split P_r(X) with X^2 = N into (power of X, polynomial in N): odd-index
// polynomials carry one factor of X, even-index ones none
std::pair<int, IntPoly> chebyshev_in_n(int r) {
    IntPoly p = chebyshev_like(r);
    std::vector<BigInt> packed(static_cast<size_t>(p.degree() / 2) + 1, BigInt(0));
    int parity = r % 2;
    for (int e = parity; e <= p.degree(); e += 2)
        packed[static_cast<size_t>((e - parity) / 2)] = p.coeff(static_cast<size_t>(e));
    return {parity, IntPoly(std::move(packed))};
}

} // namespace

FactoredDet difrancesco_factors(const CategoryId& cat, int k) {
    FactoredDet det;
    IntPoly X = IntPoly::variable();
    switch (cat.family) {
        case CategoryFamily::NC2: {
            if (k % 2) return det;
            for (int r = 1; r <= k / 2; ++r)
                push_factor(det, chebyshev_like(r), binomial_exponents(k / 2, r).second);
            return det;
        }
        case CategoryFamily::NC12: {
            push_factor(det, X, exponent_sum_a(cat, k));
            IntPoly shifted = X - IntPoly(1);
            for (int r = 1; r <= k / 2; ++r) {
                BigInt expo(0);
                for (int l = r; l <= k / 2; ++l)
                    expo += BigInt::binomial(k, 2 * l) * binomial_exponents(l, r).second;
                push_factor(det, chebyshev_like(r).compose(shifted), expo);
            }
            return det;
        }
        case CategoryFamily::NC: {
            BigInt half_powers = exponent_sum_a(cat, k);
            for (int r = 1; r <= k; ++r) {
                BigInt d = binomial_exponents(k, r).second;
                auto [xpow, body] = chebyshev_in_n(r);
                if (xpow) half_powers += d;
                push_factor(det, body, d);
            }
            if (half_powers % BigInt(2) != BigInt(0))
                throw std::logic_error("meander factors: odd power of sqrt(N)");
            push_factor(det, X, half_powers.divide_exact(BigInt(2)));
            return det;
        }
        case CategoryFamily::NC_even: {
            if (k % 2) throw DomainError("even-block meander determinant: k must be even");
            BigInt half_powers = exponent_sum_a(cat, k);
            for (int r = 1; r <= k / 2; ++r) {
                BigInt d = d_primed(k / 2, r) * BigInt(2);
                auto [xpow, body] = chebyshev_in_n(r);
                if (xpow) half_powers += d;
                push_factor(det, body, d);
            }
            if (half_powers % BigInt(2) != BigInt(0))
                throw std::logic_error("meander factors: odd power of sqrt(N)");
            // a negative residual power would flag a convention bug upstream
            push_factor(det, X, half_powers.divide_exact(BigInt(2)));
            return det;
        }
        default:
            throw DomainError("meander determinant: defined for nc2, nc, nc12, nc_even");
    }
}

} // namespace easygram
