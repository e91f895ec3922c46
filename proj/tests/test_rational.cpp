#include <doctest.h>

#include <stdexcept>

#include "dunklpoly/rational.hpp"
#include "test_support.hpp"

using dunklpoly::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts p and p/q") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("0") == Rational(0));

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
}

TEST_CASE("exact field arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(dunklpoly::inverse(Rational(0)), std::invalid_argument);
    CHECK(dunklpoly::inverse(Rational(-2, 3)) == Rational(-3, 2));
    CHECK(dunklpoly::abs(Rational(-2, 3)) == Rational(2, 3));
}

TEST_CASE("pow handles negative exponents") {
    CHECK(dunklpoly::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(dunklpoly::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(dunklpoly::pow(Rational(5), 0) == Rational(1));
    CHECK(dunklpoly::pow(Rational(0), 4) == Rational(0));
    CHECK_THROWS_AS(dunklpoly::pow(Rational(0), -1), std::invalid_argument);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(3, 4) >= Rational(3, 4));
    CHECK(Rational(1, 2).sign() == 1);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("canonical form survives arbitrary arithmetic") {
    testsupport::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(50, 40);
        Rational b = rng.nonzero_rational(50, 40);
        Rational c = (a + b) * (a - b) / b;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), c.numerator().get_mpz_t(), c.denominator().get_mpz_t());
        CHECK(c.denominator() > 0);
        CHECK(g == 1);
        CHECK(Rational::parse(c.str()) == c);
    }
}
