#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "easygram/bigint.hpp"
#include "easygram/rational.hpp"

#include <random>

using namespace easygram;

TEST_CASE("small arithmetic agrees with int64") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int64_t> dist(-1000000000, 1000000000);
    for (int i = 0; i < 2000; ++i) {
        int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)) == BigInt(a / 1000) * BigInt(1000) * BigInt(b) +
                                             BigInt(a % 1000) * BigInt(b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
    }
}

TEST_CASE("division identities on large random operands") {
    std::mt19937_64 rng(99);
    auto random_big = [&](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i)
            v = v * BigInt(int64_t(1) << 32) + BigInt(int64_t(rng() & 0xffffffffu));
        return rng() & 1 ? -v : v;
    };
    for (int i = 0; i < 300; ++i) {
        BigInt a = random_big(1 + int(rng() % 12));
        BigInt b = random_big(1 + int(rng() % 6));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("string round trip") {
    CHECK(BigInt("0").to_string() == "0");
    CHECK(BigInt("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    CHECK(BigInt::factorial(30).to_string() == "265252859812191058636308480000000");
    CHECK(BigInt::pow(BigInt(2), 128).to_string() == "340282366920938463463374607431768211456");
}

TEST_CASE("factorial binomial gcd") {
    CHECK(BigInt::binomial(60, 30).to_string() == "118264581564861424");
    CHECK(BigInt::gcd(BigInt::factorial(20), BigInt::pow(BigInt(2), 30)) ==
          BigInt(1 << 18));
    CHECK(BigInt::falling(BigInt(7), 3) == BigInt(210));
    CHECK(BigInt::binomial(12, 5) == BigInt(792));
}

TEST_CASE("rational normalization and arithmetic") {
    Rational a(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK((a * Rational(-2, 3)).to_string() == "1");
    CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
}
