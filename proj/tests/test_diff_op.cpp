#include <doctest.h>

#include <vector>

#include "jacobitype/diff_op.hpp"
#include "jacobitype/random_poly.hpp"

using namespace jacobitype;

namespace {

// Random operators over the coefficient family {1, x, x^2, 1/(x-1)} with
// order <= 3, per the composition properties.
DiffOp sample_op(PolySampler& sampler) {
    const std::vector<RatFunc> family = {
        RatFunc(Poly(Rational(1))),
        RatFunc(Poly::variable()),
        RatFunc(Poly{0, 0, 1}),
        RatFunc(Poly(Rational(1)), Poly{-1, 1}),
    };
    DiffOp op;
    for (long ord = 0; ord <= 3; ++ord)
        if (sampler.next_index(0, 1) == 1)
            op.add_term(ord, family[static_cast<std::size_t>(sampler.next_index(0, 3))]);
    return op;
}

WeightedPoly monomial_w(long k) { return WeightedPoly::canonical(0, 0, Poly::monomial(1, k)); }

}  // namespace

TEST_CASE("composition by the product rule") {
    const DiffOp a = DiffOp::derivative();
    const DiffOp b = DiffOp::with_term(1, RatFunc(Poly::variable()));
    const DiffOp c = compose(a, b);  // x D^2 + D
    CHECK(c.coeff(2).as_poly() == Poly::variable());
    CHECK(c.coeff(1).as_poly() == Poly(Rational(1)));
    CHECK(compose(a, a) == DiffOp::derivative(2));
}

TEST_CASE("composition with a singular coefficient, checked by action") {
    const DiffOp a = DiffOp::with_term(2, RatFunc(Poly{-1, 0, 1}));
    const DiffOp b = DiffOp::with_term(0, RatFunc(Poly(Rational(1)), Poly{-1, 1}));
    const DiffOp ab = compose(a, b);
    for (long k = 0; k <= 6; ++k)
        CHECK(ab.apply(monomial_w(k)) == a.apply(b.apply(monomial_w(k))));
}

TEST_CASE("composition is associative and compatible with application") {
    PolySampler sampler(30103);
    for (int t = 0; t < 25; ++t) {
        const DiffOp a = sample_op(sampler);
        const DiffOp b = sample_op(sampler);
        const DiffOp c = sample_op(sampler);
        const DiffOp left = compose(compose(a, b), c);
        const DiffOp right = compose(a, compose(b, c));
        const DiffOp ab = compose(a, b);
        for (long k = 0; k <= 10; ++k) {
            const auto w = monomial_w(k);
            CHECK(left.apply(w) == right.apply(w));
            CHECK(ab.apply(w) == a.apply(b.apply(w)));
        }
    }
}

TEST_CASE("application examples") {
    // Identity-coefficient derivative on (x-1).
    const auto res = DiffOp::derivative().apply(WeightedPoly::canonical(1, 0, Poly(Rational(1))));
    CHECK(res == WeightedPoly::canonical(0, 0, Poly(Rational(1))));

    // (x^2-1)D^2 + 2xD applied to x.
    DiffOp l2;
    l2.add_term(2, RatFunc(Poly{-1, 0, 1}));
    l2.add_term(1, RatFunc(Poly{0, 2}));
    CHECK(l2.apply(Poly::variable()) == (Poly{0, 2}));
    CHECK(l2.apply(Poly(Rational(5))).is_zero());

    // Singular order-0 coefficient -2/(x-1) against (x-1).
    const DiffOp s = DiffOp::with_term(0, RatFunc(Poly(Rational(-2)), Poly{-1, 1}));
    const auto r = s.apply(WeightedPoly::canonical(1, 0, Poly(Rational(1))));
    CHECK(r == WeightedPoly::canonical(0, 0, Poly(Rational(-2))));
}

TEST_CASE("denominators outside the weight family are rejected") {
    const DiffOp bad = DiffOp::with_term(0, RatFunc(Poly(Rational(1)), Poly{0, 1}));  // 1/x
    CHECK_THROWS_AS(bad.apply(monomial_w(2)), UnsupportedDenominator);
}

TEST_CASE("operator bookkeeping") {
    DiffOp op;
    CHECK(op.is_zero());
    CHECK(op.order() == -1);
    op.add_term(2, RatFunc(Poly::variable()));
    op.add_term(2, RatFunc(Poly::variable().scaled(-1)));
    CHECK(op.is_zero());  // cancellation removes the stored coefficient
    op.add_term(1, RatFunc(Poly(Rational(2))));
    CHECK(op.order() == 1);
    CHECK(op.plus_constant(3).coeff(0).as_poly() == Poly(Rational(3)));
    CHECK(op.scaled(0).is_zero());
    CHECK_THROWS_AS(DiffOp::with_term(-1, RatFunc(Poly(Rational(1)))), std::invalid_argument);
}
