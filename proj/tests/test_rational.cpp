// ============================================================================
// test_rational.cpp — exact rational arithmetic
// ============================================================================
#include "doctest.h"

#include <random>

#include "reqlint/errors.hpp"
#include "reqlint/rational.hpp"

using namespace reqlint;

TEST_SUITE("rational") {

TEST_CASE("decimal parsing produces exact fractions") {
    CHECK(Rational::parse_decimal("20") == Rational(20));
    CHECK(Rational::parse_decimal("0.5") == Rational(1, 2));
    CHECK(Rational::parse_decimal("-3.25") == Rational(-13, 4));
    CHECK(Rational::parse_decimal("2.50") == Rational(5, 2));
    CHECK(Rational::parse_decimal("-0.125") == Rational(-1, 8));
    CHECK(Rational::parse_decimal("007") == Rational(7));
}

TEST_CASE("parse errors are rejected") {
    CHECK_THROWS_AS(Rational::parse_decimal(""), Error);
    CHECK_THROWS_AS(Rational::parse_decimal("1.2.3"), Error);
    CHECK_THROWS_AS(Rational::parse_decimal("abc"), Error);
    CHECK_THROWS_AS(Rational::parse_decimal("1e3"), Error);
    // Wider than 64-bit intermediate arithmetic allows.
    CHECK_THROWS_AS(Rational::parse_decimal("123456789012345678901234567890"), Error);
}

TEST_CASE("canonical form and equality") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("decimal rendering is exact and round-trips") {
    CHECK(Rational(1, 2).to_decimal_string() == "0.5");
    CHECK(Rational(7, 4).to_decimal_string() == "1.75");
    CHECK(Rational(20).to_decimal_string() == "20");
    CHECK(Rational(-13, 4).to_decimal_string() == "-3.25");
    CHECK(Rational(1, 5).to_decimal_string() == "0.2");
    // Non-terminating decimals fall back to a fraction rendering.
    CHECK(Rational(1, 3).to_decimal_string() == "1/3");
    CHECK(Rational(-5, 6).to_decimal_string() == "-5/6");
}

TEST_CASE("ordering is a strict total order on random values") {
    std::mt19937_64 rng(0x7A7A);
    auto rand_rational = [&] {
        std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
        std::int64_t den = static_cast<std::int64_t>(rng() % 40) + 1;
        return Rational(num, den);
    };
    for (int i = 0; i < 2000; ++i) {
        Rational a = rand_rational(), b = rand_rational(), c = rand_rational();
        int rel = (a < b ? 1 : 0) + (b < a ? 1 : 0) + (a == b ? 1 : 0);
        CHECK(rel == 1); // exactly one of <, >, ==
        if (a < b && b < c)
            CHECK(a < c);
        CHECK(a <= a);
        CHECK(a == a);
    }
}

TEST_CASE("midpoint lies strictly between distinct values") {
    std::mt19937_64 rng(0x90FF);
    for (int i = 0; i < 2000; ++i) {
        Rational a(static_cast<std::int64_t>(rng() % 400) - 200,
                   static_cast<std::int64_t>(rng() % 16) + 1);
        Rational b(static_cast<std::int64_t>(rng() % 400) - 200,
                   static_cast<std::int64_t>(rng() % 16) + 1);
        if (a == b)
            continue;
        Rational lo = a < b ? a : b, hi = a < b ? b : a;
        Rational mid = Rational::midpoint(lo, hi);
        CHECK(lo < mid);
        CHECK(mid < hi);
    }
    CHECK(Rational::midpoint(Rational(10), Rational(20)) == Rational(15));
    CHECK(Rational::midpoint(Rational(1, 2), Rational(3)) == Rational(7, 4));
}

TEST_CASE("arithmetic stays exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(10) - Rational(1) == Rational(9));
    CHECK(Rational(20) + Rational(1) == Rational(21));
}

} // TEST_SUITE
