#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "easygram/gram.hpp"
#include "easygram/group_oracle.hpp"

using namespace easygram;

namespace {
GroupSpec sym(int n) { return {GroupFamily::Symmetric, n, 1}; }
GroupSpec alt(int n) { return {GroupFamily::Alternating, n, 1}; }
GroupSpec cyc(int n) { return {GroupFamily::Cyclic, n, 1}; }
GroupSpec dih(int n) { return {GroupFamily::Dihedral, n, 1}; }
GroupSpec hyp(int n) { return {GroupFamily::Hyperoctahedral, n, 2}; }
GroupSpec refl(int n, int s) { return {GroupFamily::ComplexReflection, n, s}; }
} // namespace

TEST_CASE("cyclotomic arithmetic") {
    // 1 + z + z^2 + z^3 + z^4 = 0 for the fifth root
    Cyclotomic sum = Cyclotomic::zero(5);
    for (int e = 0; e < 5; ++e) sum += Cyclotomic::root_power(5, e);
    CHECK(sum.is_zero());
    // z * conj(z) = 1
    Cyclotomic z = Cyclotomic::root_power(7, 1);
    CHECK(z * z.conjugate() == Cyclotomic(7, Rational(1)));
    // order 2: zeta = -1
    CHECK(Cyclotomic::root_power(2, 1) == Cyclotomic(2, Rational(-1)));
    CHECK(cyclotomic_polynomial(6).degree() == 2);
    CHECK(cyclotomic_polynomial(12).degree() == 4);
}

TEST_CASE("group sizes") {
    CHECK(enumerate_group(sym(3)).size() == 6);
    CHECK(enumerate_group(hyp(3)).size() == 48);
    CHECK(enumerate_group(refl(2, 3)).size() == 18);
    CHECK(enumerate_group(alt(4)).size() == 12);
    CHECK(enumerate_group(cyc(6)).size() == 6);
    CHECK(enumerate_group(dih(5)).size() == 10);
    CHECK_THROWS_AS(enumerate_group(sym(12)), CapacityError);
}

TEST_CASE("enumeration is closed under products (spot check)") {
    auto elems = enumerate_group(refl(2, 3));
    auto mul = [](const GenPermMatrix& a, const GenPermMatrix& b) {
        GenPermMatrix r;
        size_t n = a.sigma.size();
        r.sigma.resize(n);
        r.phase.resize(n);
        for (size_t j = 0; j < n; ++j) {
            r.sigma[j] = a.sigma[b.sigma[j]];
            r.phase[j] = (a.phase[b.sigma[j]] + b.phase[j]) % 3;
        }
        return r;
    };
    for (const auto& a : elems)
        for (const auto& b : elems) {
            GenPermMatrix c = mul(a, b);
            CHECK(std::find(elems.begin(), elems.end(), c) != elems.end());
        }
}

TEST_CASE("character law of the cyclic group") {
    DiscreteLaw law = character_law(cyc(5));
    CHECK(law.probability_of(Rational(0)) == Rational(4, 5));
    CHECK(law.probability_of(Rational(5)) == Rational(1, 5));
    for (int n = 1; n <= 8; ++n)
        CHECK(character_law(cyc(n)) == cyclic_character_law_closed(n));
}

TEST_CASE("character law of the dihedral group") {
    DiscreteLaw law = character_law(dih(4));
    CHECK(law.probability_of(Rational(0)) == Rational(5, 8));
    CHECK(law.probability_of(Rational(2)) == Rational(1, 4));
    CHECK(law.probability_of(Rational(4)) == Rational(1, 8));
    for (int n = 3; n <= 8; ++n)
        CHECK(character_law(dih(n)) == dihedral_character_law_closed(n));
}

TEST_CASE("character law of the symmetric group") {
    DiscreteLaw law = character_law(sym(3));
    CHECK(law.probability_of(Rational(0)) == Rational(1, 3));
    CHECK(law.probability_of(Rational(1)) == Rational(1, 2));
    CHECK(law.probability_of(Rational(3)) == Rational(1, 6));
    for (int n = 1; n <= 6; ++n)
        CHECK(character_law(sym(n)) == symmetric_character_law_closed(n));
}

TEST_CASE("truncated character law over the symmetric group") {
    DiscreteLaw law = truncated_character_law(sym(3), 2);
    CHECK(law.probability_of(Rational(0)) == Rational(1, 2));
    CHECK(law.probability_of(Rational(1)) == Rational(1, 3));
    CHECK(law.probability_of(Rational(2)) == Rational(1, 6));

    // s = N reduces to the full character law
    for (int n = 2; n <= 5; ++n)
        CHECK(truncated_character_law(sym(n), n) == character_law(sym(n)));

    DiscreteLaw one = truncated_character_law(sym(4), 1);
    CHECK(one.probability_of(Rational(0)) == Rational(3, 4));
    CHECK(one.probability_of(Rational(1)) == Rational(1, 4));
}

TEST_CASE("exact monomial integrals") {
    CHECK(integrate_exact(sym(3), parse_word("o"), {1}, {1}) == Cyclotomic(1, Rational(1, 3)));
    CHECK(integrate_exact(sym(4), parse_word("oo"), {1, 2}, {1, 2}) ==
          Cyclotomic(1, Rational(1, 12)));
    CHECK(integrate_exact(hyp(2), parse_word("oo"), {1, 2}, {1, 2}).is_zero());
}

TEST_CASE("fixed point dimensions") {
    CHECK(fix_dim(sym(4), uncolored_word(3)) == BigInt(5));
    CHECK(fix_dim(hyp(3), uncolored_word(2)) == BigInt(1));
    CHECK(fix_dim(refl(2, 4), parse_word("ob")) == BigInt(1));
    // stationarity in N at fixed k
    for (int k = 1; k <= 5; ++k) {
        BigInt expected = bell_number(k);
        for (int n = k; n <= 6; ++n) CHECK(fix_dim(sym(n), uncolored_word(k)) == expected);
    }
}

TEST_CASE("fixed point dimension equals the Gram rank") {
    // symmetric group against the full lattice
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            ExactMatrix g = gram_matrix(CategoryId::of(CategoryFamily::P), uncolored_word(k), n);
            CHECK(fix_dim(sym(n), uncolored_word(k)) == BigInt(static_cast<int64_t>(g.rank())));
        }
    // hyperoctahedral against even blocks
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            ExactMatrix g =
                gram_matrix(CategoryId::of(CategoryFamily::P_even), uncolored_word(k), n);
            CHECK(fix_dim(hyp(n), uncolored_word(k)) == BigInt(static_cast<int64_t>(g.rank())));
        }
    // phased reflections against the balanced families, colored words
    for (int s = 1; s <= 4; ++s)
        for (int len = 1; len <= 4; ++len)
            for (uint32_t mask = 0; mask < (1u << len); ++mask) {
                ColoredWord w(len);
                for (int i = 0; i < len; ++i)
                    w[i] = (mask >> i) & 1 ? Color::Black : Color::White;
                ExactMatrix g = gram_matrix(CategoryId::ps(s), w, 2);
                CHECK(fix_dim(refl(2, s), w) == BigInt(static_cast<int64_t>(g.rank())));
                if (s <= 3 && len <= 3) {
                    ExactMatrix g3 = gram_matrix(CategoryId::ps(s), w, 3);
                    CHECK(fix_dim(refl(3, s), w) ==
                          BigInt(static_cast<int64_t>(g3.rank())));
                }
            }
}

TEST_CASE("exact fixed-vector test for generalized permutation matrices") {
    // every permutation matrix fixes every partition vector
    for (const auto& g : enumerate_group(sym(3)))
        for (const auto& pi : enumerate_partitions(uncolored_word(3)))
            CHECK(is_fixed_vector_exact(pi, g, 1));
    // a sign flip keeps the pair vector but kills the singleton one
    GenPermMatrix flip{{0, 1}, {0, 1}};
    CHECK(is_fixed_vector_exact(
        Partition::one_row_uncolored(2, {{0, 1}}), flip, 2));
    CHECK(!is_fixed_vector_exact(
        Partition::one_row_uncolored(2, {{0}, {1}}), flip, 2));
    // phased reflection fixes the mixed-color arc exactly
    GenPermMatrix phased{{0, 1}, {1, 2}};
    Partition arc = Partition::one_row({Color::White, Color::Black}, {{0, 1}});
    CHECK(is_fixed_vector_exact(arc, phased, 3));
    Partition same = Partition::one_row({Color::White, Color::White}, {{0, 1}});
    CHECK(!is_fixed_vector_exact(same, phased, 3));
}

TEST_CASE("group averaging agrees with the Weingarten formula") {
    CategoryId P = CategoryId::of(CategoryFamily::P);
    CategoryId Peven = CategoryId::of(CategoryFamily::P_even);
    for (int n : {3, 4}) {
        for (int d = 1; d <= 3; ++d) {
            ColoredWord word = uncolored_word(d);
            std::vector<int> idx(2 * d, 1);
            // iterate all index tuples in {1..n}^{2d}
            while (true) {
                std::vector<int> rows(idx.begin(), idx.begin() + d);
                std::vector<int> cols(idx.begin() + d, idx.end());
                Cyclotomic oracle = integrate_exact(sym(n), word, rows, cols);
                CHECK(oracle.rational_value() == integrate_monomial(P, n, word, rows, cols));
                if (n <= 3) {
                    Cyclotomic ho = integrate_exact(hyp(n), word, rows, cols);
                    CHECK(ho.rational_value() == integrate_monomial(Peven, n, word, rows, cols));
                }
                int pos = 2 * d - 1;
                while (pos >= 0 && idx[pos] == n) idx[pos--] = 1;
                if (pos < 0) break;
                ++idx[pos];
            }
        }
    }
}
