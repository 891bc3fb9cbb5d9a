#include <doctest.h>

#include "jacobitype/weighted_poly.hpp"
#include "jacobitype/random_poly.hpp"

using namespace jacobitype;

TEST_CASE("canonicalization absorbs all roots at the endpoints") {
    const auto w = WeightedPoly::canonical(0, 0, Poly{-1, 0, 1});
    CHECK(w.nu() == Rational(1));
    CHECK(w.mu() == Rational(1));
    CHECK(w.body() == Poly(Rational(1)));

    const auto v = WeightedPoly::canonical(Rational(1, 2), 0, Poly{1, 1});
    CHECK(v.nu() == Rational(1, 2));
    CHECK(v.mu() == Rational(1));

    const auto u = WeightedPoly::canonical(0, 0, Poly{1, -2, 1});
    CHECK(u.nu() == Rational(2));
    CHECK(u.mu() == Rational(0));

    CHECK(WeightedPoly::canonical(3, Rational(1, 2), Poly{}).is_zero());
}

TEST_CASE("canonicalization is idempotent") {
    PolySampler sampler(4242);
    for (int t = 0; t < 25; ++t) {
        const auto w = WeightedPoly::canonical(Rational(sampler.next_index(0, 3)),
                                               Rational(sampler.next_index(-2, 3), 2),
                                               sampler.next_poly(6));
        if (w.is_zero()) continue;
        const auto again = WeightedPoly::canonical(w.nu(), w.mu(), w.body());
        CHECK(w == again);
    }
}

TEST_CASE("derivative closed form") {
    // Constant.
    CHECK(WeightedPoly::canonical(0, 0, Poly(Rational(1))).derivative().is_zero());
    // (x-1) -> 1.
    const auto d = WeightedPoly::canonical(1, 0, Poly(Rational(1))).derivative();
    CHECK(d.nu() == Rational(0));
    CHECK(d.mu() == Rational(0));
    CHECK(d.body() == Poly(Rational(1)));
    // 2(x+1)^{3/2} -> 3(x+1)^{1/2}.
    const auto f = WeightedPoly::canonical(0, Rational(3, 2), Poly(Rational(2))).derivative();
    CHECK(f.nu() == Rational(0));
    CHECK(f.mu() == Rational(1, 2));
    CHECK(f.body() == Poly(Rational(3)));
}

TEST_CASE("iterated derivative agrees with plain polynomial differentiation") {
    PolySampler sampler(991);
    for (int t = 0; t < 15; ++t) {
        const auto w = WeightedPoly::canonical(Rational(sampler.next_index(0, 2)),
                                               Rational(sampler.next_index(0, 2)), sampler.next_poly(5));
        WeightedPoly cur = w;
        Poly plain = w.to_poly();
        for (long k = 1; k <= 8; ++k) {
            cur = cur.derivative();
            plain = plain.derivative();
            CHECK(cur.to_poly() == plain);
        }
    }
}

TEST_CASE("expansion requires nonnegative integer exponents") {
    CHECK(WeightedPoly::canonical(1, 1, Poly(Rational(1))).to_poly() == (Poly{-1, 0, 1}));
    CHECK(WeightedPoly::canonical(2, 0, Poly(Rational(3))).to_poly() == (Poly{3, -6, 3}));
    CHECK_THROWS_AS(WeightedPoly::canonical(Rational(1, 2), 0, Poly(Rational(1))).to_poly(), NonIntegerExponent);
    CHECK_THROWS_AS(WeightedPoly::canonical(-1, 0, Poly(Rational(1))).to_poly(), NonIntegerExponent);
}

TEST_CASE("sums align exponents") {
    const auto a = WeightedPoly::canonical(2, 0, Poly(Rational(1)));
    const auto b = WeightedPoly::canonical(1, 0, Poly(Rational(1)));
    const auto s = a + b;  // (x-1)^2 + (x-1) = (x-1)x
    CHECK(s.nu() == Rational(1));
    CHECK(s.body() == (Poly{0, 1}));
    CHECK((WeightedPoly{} + a) == a);
    const auto zero = a + a.times(Rational(-1));
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(a + WeightedPoly::canonical(Rational(1, 2), 0, Poly(Rational(1))), std::logic_error);
}
