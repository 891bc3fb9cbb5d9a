#include <doctest.h>

#include "jacobitype/high_order.hpp"
#include "jacobitype/jacobi_type.hpp"
#include "jacobitype/orthogonality.hpp"
#include "jacobitype/random_poly.hpp"
#include "jacobitype/special.hpp"
#include "test_util.hpp"

using namespace jacobitype;

TEST_CASE("normalized moments") {
    CHECK(normalized_moment(0, Rational(5, 2), Rational(-1, 2)) == Rational(1));
    CHECK(normalized_moment(1, 0, 0) == Rational(1));
    CHECK(normalized_moment(2, 1, Rational(1, 2)) == Rational(20, 21));
    CHECK_THROWS_AS(normalized_moment(1, -1, 0), DegenerateParameter);
}

TEST_CASE("moments match direct integration for integer parameters") {
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long j = 0; j <= 8; ++j)
                CHECK(normalized_moment(j, a, b) ==
                      testutil::direct_weighted_integral(Poly{1, 1}.pow(j), a, b));
}

TEST_CASE("weighted integrals match direct integration") {
    PolySampler sampler(616);
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            for (int t = 0; t < 10; ++t) {
                const Poly p = sampler.next_poly(8);
                CHECK(weighted_integral(p, a, b) == testutil::direct_weighted_integral(p, a, b));
            }
}

TEST_CASE("inner product examples") {
    const InnerProductSpec spec(0, 0, 1);
    CHECK(inner_product(Poly(Rational(1)), Poly(Rational(1)), spec) == Rational(2));
    CHECK(inner_product(Poly(Rational(1)), Poly{-1, 2}, spec) == Rational(0));
    // Integral part 7/3 plus the mass contribution 1.
    CHECK(inner_product(Poly{-1, 2}, Poly{-1, 2}, spec) == Rational(10, 3));
    CHECK(inner_product(Poly(Rational(1)), Poly(Rational(1)), InnerProductSpec(3, Rational(1, 2), Rational(1, 3))) ==
          Rational(4, 3));
    CHECK_THROWS_AS(InnerProductSpec(0, Rational(-3, 2), 1), DegenerateParameter);
    CHECK_THROWS_AS(InnerProductSpec(0, 0, -1), std::invalid_argument);
}

TEST_CASE("boundary forms") {
    const InnerProductSpec spec(0, 0, 1);
    PolySampler sampler(51);
    for (int t = 0; t < 8; ++t) {
        const Poly g = sampler.next_poly(6);
        CHECK(boundary_forms(Poly(Rational(3)), g, spec).t == Rational(0));
        const Poly f = sampler.next_poly(6);
        const auto ab = boundary_forms(f, g, spec);
        const auto ba = boundary_forms(g, f, spec);
        CHECK(ab.s == ba.s);
        CHECK(ab.t == ba.t);
    }
    CHECK(boundary_forms(Poly::variable(), Poly::variable(), spec).t == Rational(2, 3));
    CHECK_THROWS_AS(boundary_forms(Poly::variable(), Poly::variable(), InnerProductSpec(Rational(1, 2), 0, 1)),
                    DegenerateParameter);
}

TEST_CASE("boundary forms match direct integration") {
    PolySampler sampler(2601);
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b) {
            const InnerProductSpec spec(a, b, 0);
            for (int t = 0; t < 5; ++t) {
                const Poly f = sampler.next_poly(6);
                const Poly g = sampler.next_poly(6);
                const auto forms = boundary_forms(f, g, spec);

                // T directly: h^{-1} integral f' g' (1-x)^{a+1} (1+x)^{b+1}.
                const Poly t_integrand = f.derivative() * g.derivative() * Poly{1, -1} * Poly{1, 1};
                CHECK(forms.t == testutil::direct_weighted_integral(t_integrand, a, b));

                // S directly: expand the lifted derivatives, integrate the plain
                // polynomial against (1+x)^{a+b+2}, renormalize by h_{a,b}.
                const auto lift = [&](const Poly& p) {
                    Poly body = Poly{-1, 1}.pow(a + 1) * p;
                    for (long k = 0; k < a + 2; ++k) body = body.derivative();
                    return body;
                };
                const Poly weight = Poly{1, -1}.pow(a) * Poly{1, 1}.pow(b);
                const Rational h = testutil::integrate_over_interval(weight);
                const Rational direct =
                    testutil::integrate_over_interval(lift(f) * lift(g) * Poly{1, 1}.pow(a + b + 2)) / h;
                CHECK(forms.s == direct);
            }
        }
}

TEST_CASE("boundary identities for the operator") {
    PolySampler sampler(8088);
    for (long a = 0; a <= 2; ++a)
        for (const Rational& b : {Rational(0), Rational(1, 2), Rational(7, 3)}) {
            const InnerProductSpec no_mass(a, b, 0);
            const HighOpParams prm(a, b);
            const DiffOp l2 = jacobi_operator({Rational(a), b});
            const Rational coupling = factorial(a + 2) * pochhammer(b + 1, a + 1);
            for (int t = 0; t < 5; ++t) {
                const Poly f = sampler.next_poly(7);
                const Poly g = sampler.next_poly(7);
                const auto forms = boundary_forms(f, g, no_mass);
                const Rational fp1 = f.derivative().eval(1);
                CHECK(inner_product(elementary_apply(prm, f), g, no_mass) ==
                      forms.s - Rational(2 * (a + 1)) * coupling * fp1 * g.eval(1));
                CHECK(inner_product(l2.apply(f), g, no_mass) == forms.t);
                CHECK(elementary_apply(prm, f).eval(1).is_zero());
                CHECK(l2.apply(f).eval(1) == Rational(2 * (a + 1)) * fp1);
            }
        }
}

TEST_CASE("symmetry defect vanishes") {
    CHECK(symmetry_defect(Poly{1, 2, 3}, Poly{1, 2, 3}, InnerProductSpec(1, Rational(1, 2), 2)) == Rational(0));
    CHECK(symmetry_defect(Poly::variable(), Poly{0, 0, 1}, InnerProductSpec(0, 0, 1)) == Rational(0));
    CHECK(symmetry_defect(Poly{0, 0, 0, 1}, Poly{2, 1}, InnerProductSpec(1, Rational(1, 2), Rational(1, 3))) ==
          Rational(0));
}

TEST_CASE("gram matrix") {
    const auto gram = gram_matrix(4, InnerProductSpec(0, 0, 1));
    CHECK(gram[0][0] == Rational(2));
    CHECK(gram[0][1] == Rational(0));
    CHECK(gram[1][1] == Rational(10, 3));
    CHECK(gram[2][2] == Rational(10));
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; j <= 4; ++j) {
            if (i == j)
                CHECK(gram[i][j] > 0);
            else
                CHECK(gram[i][j].is_zero());
        }
    // Orthogonality against direct integration: mass term + plain integral.
    const Poly y1 = jacobi_type_poly(1, {0, 0}, MassParams(0, 1));
    const Poly y3 = jacobi_type_poly(3, {0, 0}, MassParams(0, 1));
    CHECK(testutil::direct_weighted_integral(y1 * y3, 0, 0) + y1.eval(1) * y3.eval(1) == Rational(0));
}
