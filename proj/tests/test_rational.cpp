#include <doctest.h>

#include "jacobitype/rational.hpp"

using namespace jacobitype;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::from_string("7/3") == Rational(7, 3));
    CHECK(Rational::from_string("-2/4") == Rational(-1, 2));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK_THROWS_AS(Rational::from_string("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(Rational(0).inverse(), ZeroDenominator);
    CHECK_THROWS_AS(a / Rational(0), ZeroDenominator);
    CHECK(a < b * 3);
    CHECK(Rational(-1, 2) > -1);
}

TEST_CASE("rational powers and predicates") {
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).is_nonnegative_integer());
    CHECK_FALSE(Rational(-5).is_nonnegative_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(12, 4).to_long() == 3);
    CHECK_THROWS_AS(Rational(1, 2).to_long(), std::invalid_argument);
}
