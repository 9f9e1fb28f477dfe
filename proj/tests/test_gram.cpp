#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "easygram/gram.hpp"

using namespace easygram;

namespace {
const CategoryId P = CategoryId::of(CategoryFamily::P);
const CategoryId Peven = CategoryId::of(CategoryFamily::P_even);
const CategoryId P2 = CategoryId::of(CategoryFamily::P2);
const CategoryId P12 = CategoryId::of(CategoryFamily::P12);
const CategoryId CP2 = CategoryId::of(CategoryFamily::CP2);
const CategoryId NC = CategoryId::of(CategoryFamily::NC);
const CategoryId NC2 = CategoryId::of(CategoryFamily::NC2);
const CategoryId NC12 = CategoryId::of(CategoryFamily::NC12);
const CategoryId NCeven = CategoryId::of(CategoryFamily::NC_even);

IntPoly X = IntPoly::variable();

IntPoly poly(std::initializer_list<int64_t> coeffs_low_to_high) {
    std::vector<BigInt> c;
    for (int64_t v : coeffs_low_to_high) c.emplace_back(v);
    return IntPoly(std::move(c));
}
} // namespace

TEST_CASE("gram matrices, small shapes") {
    ExactMatrix g = gram_matrix(NC2, uncolored_word(4), 3);
    CHECK(g.rows() == 2);
    CHECK(g.at(0, 0) == Rational(9));
    CHECK(g.at(0, 1) == Rational(3));
    CHECK(g.at(1, 1) == Rational(9));

    ExactMatrix g2 = gram_matrix(P2, uncolored_word(2), 5);
    CHECK(g2.rows() == 1);
    CHECK(g2.at(0, 0) == Rational(5));

    ExactMatrix g3 = gram_matrix(P2, uncolored_word(4), 3);
    CHECK(g3.rows() == 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(g3.at(i, j) == (i == j ? Rational(9) : Rational(3)));
}

TEST_CASE("meander determinants of the smallest pairing and partition Gram matrices") {
    // N^2 (N^2 - 1)
    CHECK(gram_det_direct_symbolic(NC2, uncolored_word(4)) == poly({0, 0, -1, 0, 1}));
    // N^5 (N^2-1)^4 (N^2-2) expanded lazily via evaluation points
    IntPoly nc2_6 = poly({0, 0, 0, 0, 0, -2, 0, 1}) *
                    IntPoly::pow(poly({-1, 0, 1}), 4);  // N^5(N^2-2) * (N^2-1)^4
    for (int N : {2, 3, 5, 7})
        CHECK(gram_det_direct(NC2, uncolored_word(6), N) == nc2_6.evaluate(BigInt(N)));
    // NC(3): N^5 (N-1)^4 (N-2)
    IntPoly nc_3 = poly({0, 0, 0, 0, 0, 1}) * IntPoly::pow(poly({-1, 1}), 4) * poly({-2, 1});
    CHECK(gram_det_direct_symbolic(NC, uncolored_word(3)) == nc_3);
}

TEST_CASE("lindstrom formula") {
    CHECK(lindstrom_det_symbolic(P, 2) == poly({0, 0, -1, 1}));  // N^2 (N - 1)
    // P(3) and NC(3) coincide, so the product formula matches the meander value
    IntPoly nc_3 = poly({0, 0, 0, 0, 0, 1}) * IntPoly::pow(poly({-1, 1}), 4) * poly({-2, 1});
    CHECK(lindstrom_det_symbolic(P, 3) == nc_3);
    CHECK(lindstrom_det(P, 3, 2) == BigInt(0));
    // the symbolic product and pointwise values agree
    for (int N : {1, 2, 3, 5})
        CHECK(lindstrom_det(Peven, 4, N) == lindstrom_det_symbolic(Peven, 4).evaluate(BigInt(N)));
}

TEST_CASE("lindstrom equals the direct determinant") {
    for (int N : {2, 3, 5, 7}) {
        for (int k = 1; k <= 4; ++k)
            CHECK(lindstrom_det(P, k, N) == gram_det_direct(P, uncolored_word(k), N));
        for (int k = 1; k <= 5; ++k)
            CHECK(lindstrom_det(Peven, k, N) == gram_det_direct(Peven, uncolored_word(k), N));
    }
}

TEST_CASE("triangular decomposition G = A L over P(k)") {
    for (int k = 1; k <= 4; ++k) {
        auto mem = members(P, uncolored_word(k));
        size_t n = mem.size();
        for (int N : {2, 3, 5}) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    BigInt sum(0);
                    for (size_t t = 0; t < n; ++t) {
                        if (!leq(mem[i], mem[t])) continue;       // adjacency factor
                        if (!leq(mem[j], mem[t])) continue;       // lower-triangular factor
                        sum += BigInt::falling(BigInt(N), mem[t].num_blocks());
                    }
                    CHECK(sum == BigInt::pow(BigInt(N), join(mem[i], mem[j]).num_blocks()));
                }
        }
    }
}

TEST_CASE("standard tableaux counts") {
    CHECK(standard_tableaux_count({{2}}) == BigInt(1));
    CHECK(standard_tableaux_count({{2, 2}}) == BigInt(2));
    CHECK(standard_tableaux_count({{2, 1}}) == BigInt(2));
    // hook lengths against brute force on every diagram with up to 6 boxes
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : young_diagrams(n))
            CHECK(standard_tableaux_count(lambda) == standard_tableaux_count_brute(lambda));
}

TEST_CASE("orthogonal-group determinant") {
    CHECK(on_det_symbolic(2) == X);
    // N^3 (N-1)^2 (N+2)
    CHECK(on_det_symbolic(4) == poly({0, 0, 0, 1}) * poly({-1, 1}) * poly({-1, 1}) * poly({2, 1}));
    CHECK(on_det(4, 1) == BigInt(0));
    for (int N : {2, 3, 5, 7})
        for (int k = 2; k <= 8; k += 2)
            CHECK(on_det(k, N) == gram_det_direct(P2, uncolored_word(k), N));
}

TEST_CASE("bistochastic determinant") {
    CHECK(bn_det_symbolic(1) == X);
    CHECK(bn_det(2, 5) == gram_det_direct(P12, uncolored_word(2), 5));
    CHECK(bn_det(3, 7) == gram_det_direct(P12, uncolored_word(3), 7));
    for (int N : {2, 3, 5})
        for (int k = 1; k <= 5; ++k)
            CHECK(bn_det(k, N) == gram_det_direct(P12, uncolored_word(k), N));
}

TEST_CASE("ballot numbers and their differences") {
    auto [f21, d21] = binomial_exponents(2, 1);
    auto [f22, d22] = binomial_exponents(2, 2);
    CHECK(f21 == BigInt(3));
    CHECK(f22 == BigInt(1));
    CHECK(d21 == BigInt(2));
    CHECK(d22 == BigInt(1));
    auto [f31, d31] = binomial_exponents(3, 1);
    auto [f32, d32] = binomial_exponents(3, 2);
    auto [f33, d33] = binomial_exponents(3, 3);
    CHECK(f31 == BigInt(9));
    CHECK(f32 == BigInt(5));
    CHECK(f33 == BigInt(1));
    CHECK(d31 == BigInt(4));
    CHECK(d32 == BigInt(4));
    CHECK(d33 == BigInt(1));
    CHECK(binomial_exponents(4, 5).first == BigInt(0));
    CHECK(binomial_exponents(4, 7).first == BigInt(0));
}

TEST_CASE("chebyshev-type recursion") {
    CHECK(chebyshev_like(0) == IntPoly(1));
    CHECK(chebyshev_like(1) == X);
    CHECK(chebyshev_like(2) == X * X - IntPoly(1));
    CHECK(chebyshev_like(3) == X * X * X - poly({0, 2}));
}

TEST_CASE("meander formulas match the direct determinants") {
    // free pairings
    CHECK(difrancesco_det_symbolic(NC2, 4) == poly({0, 0, -1, 0, 1}));
    for (int N : {2, 3, 5, 7}) {
        for (int k = 1; k <= 8; ++k)
            CHECK(difrancesco_det(NC2, k, N) == gram_det_direct(NC2, uncolored_word(k), N));
        for (int k = 1; k <= 5; ++k)
            CHECK(difrancesco_det(NC, k, N) == gram_det_direct(NC, uncolored_word(k), N));
        for (int k = 1; k <= 5; ++k)
            CHECK(difrancesco_det(NC12, k, N) == gram_det_direct(NC12, uncolored_word(k), N));
        for (int k = 2; k <= 6; k += 2)
            CHECK(difrancesco_det(NCeven, k, N) == gram_det_direct(NCeven, uncolored_word(k), N));
    }
    IntPoly nc_3 = poly({0, 0, 0, 0, 0, 1}) * IntPoly::pow(poly({-1, 1}), 4) * poly({-2, 1});
    CHECK(difrancesco_det_symbolic(NC, 3) == nc_3);
}

TEST_CASE("shrinking relates the pairing and partition Gram matrices") {
    for (int k = 1; k <= 4; ++k)
        for (int n : {2, 3}) {
            auto pair_mem = members(NC2, uncolored_word(2 * k));
            for (const auto& a : pair_mem)
                for (const auto& b : pair_mem) {
                    Partition sa = shrink(a), sb = shrink(b);
                    // n^{|a v b|} = n^k * n^{-|sa|} * n^{-|sb|} * (n^2)^{|sa v sb|}
                    BigInt lhs = BigInt::pow(BigInt(n), join(a, b).num_blocks());
                    int expo = k + 2 * static_cast<int>(join(sa, sb).num_blocks()) -
                               static_cast<int>(sa.num_blocks()) -
                               static_cast<int>(sb.num_blocks());
                    CHECK(expo >= 0);
                    CHECK(lhs == BigInt::pow(BigInt(n), static_cast<size_t>(expo)));
                }
        }
}

TEST_CASE("weingarten matrices") {
    ExactMatrix w = weingarten_matrix(P2, uncolored_word(2), 7);
    CHECK(w.at(0, 0) == Rational(1, 7));

    ExactMatrix w2 = weingarten_matrix(CP2, parse_word("obob"), 2);
    CHECK(w2.rows() == 2);
    CHECK(w2.at(0, 0) == Rational(1, 3));
    CHECK(w2.at(0, 1) == Rational(-1, 6));
    CHECK(w2.at(1, 0) == Rational(-1, 6));
    CHECK(w2.at(1, 1) == Rational(1, 3));

    ExactMatrix w3 = weingarten_matrix(P, uncolored_word(2), 4);
    CHECK(w3.at(0, 0) == Rational(1, 12));
    CHECK(w3.at(0, 1) == Rational(-1, 12));
    CHECK(w3.at(1, 1) == Rational(1, 3));
}

TEST_CASE("weingarten pseudo-inverse identities, including singular sizes") {
    for (int N : {2, 3, 5})
        for (int k = 1; k <= 4; ++k) {
            ExactMatrix g = gram_matrix(P, uncolored_word(k), N);
            ExactMatrix w = g.quasi_inverse();
            CHECK(g * w * g == g);
            CHECK(w * g * w == w);
        }
}

TEST_CASE("monomial integration") {
    CHECK(integrate_monomial(P, 4, parse_word("oo"), {1, 2}, {1, 2}) == Rational(1, 12));
    // sum of all Weingarten entries over the three pairings of four points:
    // 3/(N(N+2)) for the orthogonal family
    for (int N : {3, 5, 7})
        CHECK(integrate_monomial(P2, N, parse_word("oooo"), {1, 1, 1, 1}, {1, 1, 1, 1}) ==
              Rational(3, int64_t(N) * (N + 2)));
    // 2/(N(N+1)) for the unitary family
    for (int N : {2, 3, 5})
        CHECK(integrate_monomial(CP2, N, parse_word("obob"), {1, 1, 1, 1}, {1, 1, 1, 1}) ==
              Rational(2, int64_t(N) * (N + 1)));
}

TEST_CASE("truncated character moments") {
    for (const CategoryId& cat : {P, P12, NC, NC12})
        CHECK(truncated_moment(cat, 6, uncolored_word(1), 2) == Rational(2, 6));
    CHECK(truncated_moment(P, 3, uncolored_word(2), 3) == Rational(2));
    CHECK(truncated_moment(P, 3, uncolored_word(1), 2) == Rational(2, 3));
    CHECK_THROWS_AS(truncated_moment(P, 3, uncolored_word(2), 4), DomainError);
}

TEST_CASE("closed Stirling form of the truncated moments") {
    CHECK(sn_truncated_closed(3, 2, 1) == Rational(2, 3));
    for (int N = 2; N <= 6; ++N) CHECK(sn_truncated_closed(N, N, 2) == Rational(2));
    CHECK(sn_truncated_closed(5, 3, 0) == Rational(1));
    // matches the trace formula on the full lattice
    for (int N = 2; N <= 5; ++N)
        for (int k = 1; k <= 4; ++k)
            for (int s = 1; s <= N; ++s)
                CHECK(sn_truncated_closed(N, s, k) ==
                      truncated_moment(P, N, uncolored_word(k), s));
}

TEST_CASE("asymptotic truncated moments") {
    CHECK(asymptotic_moment(P, uncolored_word(3), Rational(1)) == Rational(5));
    RatPoly st = asymptotic_moment_poly(P, uncolored_word(2));
    CHECK(st == RatPoly(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
    CHECK(asymptotic_moment(NC2, uncolored_word(4), Rational(1)) == Rational(2));
}

TEST_CASE("finite truncated moments approach the asymptotic sum at t = 1/2") {
    Rational limit = asymptotic_moment(P2, uncolored_word(4), Rational(1, 2));
    Rational prev;
    bool first = true;
    for (int N : {8, 16, 32}) {
        Rational diff = (truncated_moment(P2, N, uncolored_word(4), N / 2) - limit).abs();
        if (!first) CHECK(diff < prev);
        prev = diff;
        first = false;
    }
}

TEST_CASE("exponent sums over the noncrossing families") {
    // frozen values; the six-point full-lattice sum differs from the
    // noncrossing one, and the noncrossing value is the one the determinant
    // formulas need
    CHECK(exponent_sum_a(NC, 5) == BigInt(42));
    CHECK(exponent_sum_a(NC, 6) == BigInt(132));
    BigInt full6(0);
    for (const auto& pi : members(P, uncolored_word(6)))
        full6 += BigInt(2 * static_cast<int64_t>(pi.num_blocks()) - 6);
    CHECK(full6 == BigInt(130));
    // they agree up to five points
    for (int k = 1; k <= 5; ++k) {
        BigInt full(0);
        for (const auto& pi : members(P, uncolored_word(k)))
            full += BigInt(2 * static_cast<int64_t>(pi.num_blocks()) - k);
        CHECK(full == exponent_sum_a(NC, k));
    }
}

TEST_CASE("factor lists expand to the closed formulas") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(lindstrom_factors(P, k).expanded() == lindstrom_det_symbolic(P, k));
        CHECK(lindstrom_factors(Peven, k).expanded() == lindstrom_det_symbolic(Peven, k));
        CHECK(bn_factors(k).expanded() == bn_det_symbolic(k));
        CHECK(difrancesco_factors(NC, k).expanded() == difrancesco_det_symbolic(NC, k));
        CHECK(difrancesco_factors(NC12, k).expanded() == difrancesco_det_symbolic(NC12, k));
    }
    for (int k = 2; k <= 8; k += 2) {
        CHECK(on_factors(k).expanded() == on_det_symbolic(k));
        CHECK(difrancesco_factors(NC2, k).expanded() == difrancesco_det_symbolic(NC2, k));
        if (k <= 6)
            CHECK(difrancesco_factors(NCeven, k).expanded() ==
                  difrancesco_det_symbolic(NCeven, k));
    }
    CHECK(difrancesco_factors(NC2, 6).evaluate(3) == BigInt(6967296));
}

TEST_CASE("the 132x132 six-point case pins the exponent convention") {
    // moderate but decisive: the noncrossing a_6 = 132 reproduces the direct
    // determinant at N = 2, the full-lattice 130 cannot
    BigInt direct = gram_det_direct(NC, uncolored_word(6), 2);
    CHECK(difrancesco_det(NC, 6, 2) == direct);
}
