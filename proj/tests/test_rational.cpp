#include "hps/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using hps::Int;
using hps::Rational;

TEST_CASE("canonical form on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(42).to_string() == "42");
    CHECK(Rational(7, 1).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
    CHECK(Rational(-11, 4).numerator() == -11);
    CHECK(Rational(-11, 4).denominator() == 4);
}

TEST_CASE("zero denominator rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(Rational(3, 4).inverse() == Rational(4, 3));
    CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(-2, 3).pow(0) == Rational(1));
    CHECK(Rational(-5, 2).abs() == Rational(5, 2));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-1, 8).sign() == -1);
}

TEST_CASE("text round-trip") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK(Rational::from_string("-0") == Rational(0));

    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("3/-4"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1 / 2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("3/0"), std::domain_error);

    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational q(num(rng), den(rng));
        CHECK(Rational::from_string(q.to_string()) == q);
    }
}

TEST_CASE("to_double") {
    CHECK(Rational(-11, 4).to_double() == -2.75);
    CHECK(Rational(1, 3).to_double() == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("combinatorics helpers") {
    CHECK(hps::factorial(0) == 1);
    CHECK(hps::factorial(5) == 120);
    CHECK(hps::factorial(20) == Int("2432902008176640000"));
    CHECK(hps::binomial(10, 3) == 120);
    CHECK(hps::binomial(10, 0) == 1);
    CHECK(hps::binomial(3, 5) == 0);
    CHECK(hps::binomial(20, 10) == 184756);
    CHECK(hps::int_pow(Int(-3), 5) == -243);

    // Pascal rule, exercised across a block of the triangle.
    for (unsigned long n = 1; n <= 25; ++n)
        for (unsigned long k = 1; k <= n; ++k)
            CHECK(hps::binomial(n, k) == hps::binomial(n - 1, k) + hps::binomial(n - 1, k - 1));

    CHECK(hps::falling_factorial(Rational(5), 3) == Rational(60));
    CHECK(hps::falling_factorial(Rational(5), 0) == Rational(1));
    CHECK(hps::falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
}
