#include <doctest.h>

#include "jacobitype/poly.hpp"
#include "jacobitype/random_poly.hpp"
#include "jacobitype/rat_func.hpp"

using namespace jacobitype;

TEST_CASE("poly canonical form") {
    CHECK(Poly{}.is_zero());
    CHECK(Poly{}.min_exp() == 0);
    CHECK(Poly{0, 0}.is_zero());
    CHECK(Poly{1, 2, 0}.degree() == 1);
    // Laurent low-end zeros are folded away, ordinary low-end zeros kept dense.
    CHECK(Poly::from_coeffs({0, 1}, -1) == Poly(Rational(1)));
    CHECK(Poly::from_coeffs({1}, 2) == (Poly{0, 0, 1}));
    CHECK(Poly::monomial(1, 1) == (Poly{0, 1}));
    CHECK(Poly::monomial(3, -2).min_exp() == -2);
}

TEST_CASE("poly arithmetic and calculus") {
    const Poly p{1, 2, 3};  // 3x^2 + 2x + 1
    const Poly q{-1, 1};    // x - 1
    CHECK(p + q == (Poly{0, 3, 3}));
    CHECK(p * q == (Poly{-1, -1, -1, 3}));
    CHECK(p.derivative() == (Poly{2, 6}));
    CHECK(p.eval(2) == Rational(17));
    CHECK(p.scaled(Rational(1, 3)) == (Poly{Rational(1, 3), Rational(2, 3), 1}));
    CHECK(p.compose(q) == (Poly{2, -4, 3}));
    CHECK(p.reflected() == (Poly{1, -2, 3}));
    CHECK((Poly{1, 0, -2, 0, 1}) == Poly{-1, 0, 1}.pow(2));
}

TEST_CASE("laurent support") {
    const Poly f = Poly::from_coeffs({2, 0, 1}, -2);  // 2x^-2 + 1
    CHECK(f.coeff(-2) == Rational(2));
    CHECK(f.derivative() == Poly::monomial(-4, -3));
    CHECK(f.eval(2) == Rational(3, 2));
    CHECK_THROWS_AS(f.eval(0), std::domain_error);
    CHECK(f.shifted(2) == (Poly{2, 0, 1}));
    // x^0 term disappears under differentiation even mid-range.
    CHECK(Poly::from_coeffs({1, 1, 1}, -1).derivative() == Poly::from_coeffs({-1, 0, 1}, -2));
}

TEST_CASE("poly division and gcd") {
    PolySampler sampler(777);
    for (int t = 0; t < 40; ++t) {
        const Poly a = sampler.next_poly(7);
        Poly b = sampler.next_poly(4);
        if (b.is_zero()) b = Poly(Rational(1));
        const auto [quo, rem] = divmod(a, b);
        CHECK(quo * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
    CHECK(gcd(Poly{-1, 0, 1}, Poly{-1, 1}) == (Poly{-1, 1}));
    CHECK(gcd(Poly{}, Poly{0, 2}) == (Poly{0, 1}));  // monic
    CHECK_THROWS_AS(divmod(Poly{1}, Poly{}), ZeroDenominator);
}

TEST_CASE("rational function normalization") {
    CHECK(RatFunc(Poly{-1, 0, 1}, Poly{-1, 1}).as_poly() == (Poly{1, 1}));
    CHECK(RatFunc(Poly{2, 2}, Poly(Rational(2))).as_poly() == (Poly{1, 1}));
    const RatFunc zero(Poly{}, Poly{-1, 1});
    CHECK(zero.is_zero());
    CHECK(zero.den() == Poly(Rational(1)));
    CHECK_THROWS_AS(RatFunc(Poly{1}, Poly{}), ZeroDenominator);
}

TEST_CASE("normalization is insensitive to common factors") {
    PolySampler sampler(19937);
    for (int t = 0; t < 30; ++t) {
        const Poly a = sampler.next_poly(4);
        Poly b = sampler.next_poly(4);
        Poly c = sampler.next_poly(4);
        if (b.is_zero()) b = Poly{1, 1};
        if (c.is_zero()) c = Poly(Rational(1));
        CHECK(RatFunc(a * c, b * c) == RatFunc(a, b));
    }
}

TEST_CASE("poly rendering") {
    CHECK(Poly{-10, -4, 14}.str() == "14*x^2 - 4*x - 10");
    CHECK(Poly{}.str() == "0");
    CHECK(Poly{0, 1}.str() == "x");
    CHECK(Poly::monomial(Rational(1, 2), 3).str() == "1/2*x^3");
}
