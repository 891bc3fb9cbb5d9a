#include "jacobitype/ultraspherical.hpp"

#include "jacobitype/high_order.hpp"
#include "jacobitype/special.hpp"

namespace jacobitype {

Poly ultra_apply(long alpha, const Poly& y) {
    if (alpha < 0) throw DegenerateParameter("alpha must be a nonnegative integer");
    const Poly x2m1{-1, 0, 1};
    Poly inner = x2m1.pow(alpha + 1) * y;
    for (long k = 0; k < 2 * alpha + 4; ++k) inner = inner.derivative();
    return x2m1 * inner;
}

Rational ultra_lambda_high(long m, long alpha) { return pochhammer(Rational(m - 1), 2 * alpha + 4); }

Rational ultra_lambda_two(long m, long alpha) { return Rational(m) * Rational(m + 2 * alpha + 1); }

Rational ultra_coupling(long alpha) { return Rational(alpha + 2) * factorial(2 * alpha + 2) / 2; }

Poly link_residual(long alpha, const Poly& y) {
    const Poly lhs = ultra_apply(alpha, Poly{1, 1} * y);
    const Poly rhs = Poly{1, 1} * elementary_apply(HighOpParams(alpha, Rational(alpha + 2)), y);
    return lhs - rhs;
}

Poly bessel_delta(const Poly& f) { return f.derivative().shifted(-1); }

Poly compose_quadratic(const Poly& y) { return y.compose(Poly{-1, 0, 2}); }

SubstitutionResiduals substitution_residual_even(long alpha, const Poly& y) {
    const Poly u = compose_quadratic(y);
    const DiffOp second_order = jacobi_operator({Rational(alpha), Rational(alpha)});
    const HighOpParams prm(alpha, Rational(-1, 2));

    SubstitutionResiduals r;
    r.high_order = ultra_apply(alpha, u) -
                   compose_quadratic(elementary_apply(prm, y)).scaled(Rational(2).pow(2 * alpha + 4));
    r.second_order = second_order.apply(u) -
                     compose_quadratic(jacobi_operator({Rational(alpha), Rational(-1, 2)}).apply(y)).scaled(4);
    return r;
}

SubstitutionResiduals substitution_residual_odd(long alpha, const Poly& y) {
    const Poly v = Poly::variable() * compose_quadratic(y);
    const DiffOp second_order = jacobi_operator({Rational(alpha), Rational(alpha)});
    const HighOpParams prm(alpha, Rational(1, 2));

    SubstitutionResiduals r;
    r.high_order = (Poly::variable() * compose_quadratic(elementary_apply(prm, y)))
                       .scaled(Rational(2).pow(2 * alpha + 4)) -
                   ultra_apply(alpha, v);
    r.second_order = (Poly::variable() * compose_quadratic(jacobi_operator({Rational(alpha), Rational(1, 2)}).apply(y)))
                         .scaled(4) -
                     (second_order.apply(v) - v.scaled(Rational(2 * (alpha + 1))));
    return r;
}

}  // namespace jacobitype
