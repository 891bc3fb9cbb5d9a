#include <doctest.h>

#include "jacobitype/jacobi_type.hpp"

using namespace jacobitype;

TEST_CASE("modifier coefficient") {
    CHECK(modifier_coefficient(1, {0, 0}) == Rational(1));
    // (alpha+beta+2)/2 at n=1.
    CHECK(modifier_coefficient(1, {1, Rational(1, 2)}) == Rational(7, 4));
    CHECK(modifier_coefficient(2, {0, 0}) == Rational(3));
    CHECK_THROWS_AS(modifier_coefficient(3, {0, -1}), DegenerateParameter);
    CHECK_THROWS_AS(modifier_coefficient(0, {0, 0}), std::invalid_argument);
}

TEST_CASE("endpoint modifiers") {
    CHECK(modifier_r(0, {0, 0}).is_zero());
    CHECK(modifier_q(0, {2, Rational(1, 2)}).is_zero());
    CHECK(modifier_r(1, {0, 0}) == (Poly{-1, 1}));
    CHECK(modifier_q(1, {0, 0}) == (Poly{1, 1}));
    for (long n = 1; n <= 8; ++n) {
        CHECK(modifier_r(n, {1, Rational(1, 2)}).eval(1).is_zero());
        CHECK(modifier_q(n, {1, Rational(1, 2)}).eval(-1).is_zero());
    }
}

TEST_CASE("one-mass polynomials") {
    CHECK(jacobi_type_poly(1, {0, 0}, MassParams(0, 1)) == (Poly{-1, 2}));
    CHECK(jacobi_type_poly(1, {0, 0}, MassParams(1, 0)) == (Poly{1, 2}));
    for (long n = 0; n <= 6; ++n)
        CHECK(jacobi_type_poly(n, {1, Rational(1, 2)}, MassParams(0, 0)) == jacobi_poly(n, {1, Rational(1, 2)}));
}

TEST_CASE("mass constraints") {
    CHECK_THROWS_AS(MassParams(1, 1), BothMassesPositive);
    CHECK_THROWS_AS(MassParams(Rational(1, 3), Rational(2, 5)), BothMassesPositive);
    CHECK_THROWS_AS(MassParams(-1, 0), std::invalid_argument);
    CHECK_NOTHROW(MassParams(0, Rational(7)));
}

TEST_CASE("degree and leading coefficient") {
    for (long n = 0; n <= 10; ++n) {
        const Poly p = jacobi_type_poly(n, {2, Rational(5, 2)}, MassParams(0, Rational(1, 3)));
        CHECK(p.degree() == n);
        CHECK_FALSE(p.leading().is_zero());
    }
}

TEST_CASE("reflection between the two one-mass families") {
    for (long n = 0; n <= 12; ++n) {
        const Rational sign = (n % 2 == 0) ? 1 : -1;
        CHECK(modifier_q(n, {1, Rational(1, 2)}) ==
              modifier_r(n, {Rational(1, 2), 1}).reflected().scaled(sign));
        CHECK(jacobi_type_poly(n, {0, Rational(5, 2)}, MassParams(Rational(1, 3), 0)) ==
              jacobi_type_poly(n, {Rational(5, 2), 0}, MassParams(0, Rational(1, 3))).reflected().scaled(sign));
    }
}
