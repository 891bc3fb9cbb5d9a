#include "jacobitype/high_order.hpp"

#include <vector>

#include "jacobitype/jacobi_type.hpp"
#include "jacobitype/special.hpp"

namespace jacobitype {

namespace {

const RatFunc& one_over_x_minus_1() {
    static const RatFunc r(Poly(Rational(1)), Poly{-1, 1});
    return r;
}

}  // namespace

HighOpParams::HighOpParams(long alpha_in, Rational beta_in) : alpha(alpha_in), beta(std::move(beta_in)) {
    if (alpha < 0) throw DegenerateParameter("alpha must be a nonnegative integer, got " + std::to_string(alpha));
    if (beta <= -1) throw DegenerateParameter("beta must exceed -1, got " + beta.str());
}

Poly explicit_coefficient(long i, const HighOpParams& prm) {
    const long order = prm.order();
    if (i < 1 || i > order)
        throw IndexOutOfRange("coefficient index " + std::to_string(i) + " outside [1, " + std::to_string(order) + "]");
    const long a = prm.alpha;
    const Rational& b = prm.beta;

    const Poly half{Rational(-1, 2), Rational(1, 2)};  // (x-1)/2
    Poly acc;
    for (long k = std::max<long>(0, i - a - 3); k <= i - 1; ++k) {
        const HypSpec hs{
            {Rational(-k), Rational(a + 3) + b, Rational(a + i + 2 - k)},
            {b + Rational(i - k), Rational(i + 1 - k)}};
        const Rational c = Rational(-2).pow(i) * pochhammer(Rational(a + 3), i - 1 - k) *
                           pochhammer(Rational(-a - 2), i - 1 - k) /
                           (pochhammer(b + 1, i - 1 - k) * factorial(i - k) * factorial(i - 1 - k) * factorial(k));
        acc += half.pow(k + 1).scaled(c * hyp_terminating(hs));
    }
    return acc.scaled(-factorial(a + 2) * pochhammer(b + 1, a + 2));
}

Poly leibniz_coefficient(long i, const HighOpParams& prm) {
    const long order = prm.order();
    if (i < 1 || i > order)
        throw IndexOutOfRange("coefficient index " + std::to_string(i) + " outside [1, " + std::to_string(order) + "]");
    const long a = prm.alpha;
    const Rational& b = prm.beta;

    const Poly xm1{-1, 1};
    const Poly xp1{1, 1};
    Poly acc;
    for (long t = std::max<long>(0, a + 3 - i); t <= std::min(order - i, a + 2); ++t) {
        const Rational bt = binomial(a + 2, t) * binomial(order - t, i);
        const Rational c = bt * pochhammer(b + 1, a + 2) / pochhammer(b + 1, a + 2 - t) * factorial(a + 1) /
                           factorial(i - a - 3 + t);
        acc += (xp1.pow(a + 2 - t) * xm1.pow(i - a - 2 + t)).scaled(c);
    }
    return acc;
}

DiffOp explicit_operator(const HighOpParams& prm) {
    DiffOp op;
    for (long i = 1; i <= prm.order(); ++i) op.add_term(i, RatFunc(explicit_coefficient(i, prm)));
    return op;
}

Poly elementary_apply(const HighOpParams& prm, const Poly& y) {
    WeightedPoly w = WeightedPoly::canonical(Rational(prm.alpha + 1), 0, y);
    for (long k = 0; k < prm.alpha + 2; ++k) w = w.derivative();
    w = w.shifted(0, Rational(prm.alpha + 2) + prm.beta);
    for (long k = 0; k < prm.alpha + 2; ++k) w = w.derivative();
    w = w.shifted(1, -prm.beta);
    if (!w.is_zero() && (!w.nu().is_nonnegative_integer() || !w.mu().is_nonnegative_integer()))
        throw InternalNoncancellation("elementary pipeline left exponents (" + w.nu().str() + ", " + w.mu().str() + ")");
    return w.to_poly();
}

DiffOp elementary_operator(const HighOpParams& prm) {
    const long order = prm.order();
    std::vector<Poly> d(static_cast<std::size_t>(order) + 1);
    DiffOp op;
    for (long k = 1; k <= order; ++k) {
        Poly lhs = elementary_apply(prm, Poly::monomial(1, k));
        for (long i = 1; i < k; ++i)
            lhs -= (d[static_cast<std::size_t>(i)] * Poly::monomial(pochhammer(Rational(k - i + 1), i), k - i));
        d[static_cast<std::size_t>(k)] = lhs.scaled(factorial(k).inverse());
        op.add_term(k, RatFunc(d[static_cast<std::size_t>(k)]));
    }
    return op;
}

DiffOp bavinck_factor(const HighOpParams& prm, long j) {
    DiffOp f = jacobi_operator({Rational(prm.alpha), prm.beta});
    f.add_term(0, one_over_x_minus_1().scaled(Rational(-2 * (prm.alpha + 1))));
    return f.plus_constant(Rational(j) * (Rational(prm.alpha + 1) + prm.beta - Rational(j)));
}

DiffOp bavinck_operator(const HighOpParams& prm) {
    DiffOp acc = bavinck_factor(prm, 0);
    for (long j = 1; j <= prm.alpha + 1; ++j) acc = compose(bavinck_factor(prm, j), acc);
    return acc;
}

DiffOp ordered_factor(const HighOpParams& prm, long j) {
    DiffOp f;
    f.add_term(2, RatFunc(Poly{-1, 0, 1}));
    f.add_term(1, RatFunc(Poly{Rational(2 * j - 1) - prm.beta, Rational(2 * j + 1) + prm.beta}));
    if (j > 0) {
        f.add_term(0, one_over_x_minus_1().scaled(Rational(-4 * j)));
        f = f.plus_constant(Rational(j) * (Rational(j) + prm.beta));
    }
    return f;
}

DiffOp factorized_operator(const HighOpParams& prm) {
    // j = 0 is applied first (innermost).
    DiffOp acc = ordered_factor(prm, 0);
    for (long j = 1; j <= prm.alpha + 1; ++j) acc = compose(ordered_factor(prm, j), acc);
    return acc;
}

DiffOp recurrence_operator(const HighOpParams& prm) {
    // Base case of the order recurrence: (x^2-1)D^2 + (beta+1)(x-1)D.
    DiffOp acc = jacobi_operator({Rational(-1), prm.beta});
    for (long a = 0; a <= prm.alpha; ++a) {
        DiffOp outer;
        outer.add_term(2, RatFunc(Poly{-1, 0, 1}));
        outer.add_term(1, RatFunc(Poly{Rational(2 * a + 1) - prm.beta, Rational(2 * a + 3) + prm.beta}));
        outer.add_term(0, one_over_x_minus_1().scaled(Rational(-4 * (a + 1))));
        outer = outer.plus_constant(Rational(a + 1) * (Rational(a + 1) + prm.beta));
        acc = compose(outer, acc);
    }
    return acc;
}

SpectralConstants spectral_constants(long n, const HighOpParams& prm, const Rational& mass_n) {
    const long a = prm.alpha;
    const Rational& b = prm.beta;
    SpectralConstants sc;
    sc.lambda_high = pochhammer(Rational(n), a + 2) * pochhammer(Rational(n) + b, a + 2);
    sc.lambda_two = Rational(n) * (Rational(n + a + 1) + b);
    sc.coupling = factorial(a + 2) * pochhammer(b + 1, a + 1);
    sc.combined = (mass_n * pochhammer(Rational(n + 1), a + 1) * pochhammer(Rational(n) + b, a + 1) +
                   pochhammer(2, a + 1) * pochhammer(b + 1, a + 1)) *
                  Rational(n) * (Rational(n + a + 1) + b);
    return sc;
}

Poly full_residual(long n, const HighOpParams& prm, const Rational& mass_n) {
    if (mass_n < 0) throw std::invalid_argument("negative mass");
    const JacobiParams jp{Rational(prm.alpha), prm.beta};
    const Poly y = jacobi_type_poly(n, jp, MassParams(0, mass_n));
    const SpectralConstants sc = spectral_constants(n, prm, mass_n);
    const Poly high = elementary_apply(prm, y) - y.scaled(sc.lambda_high);
    const Poly second = jacobi_operator(jp).apply(y) - y.scaled(sc.lambda_two);
    return high.scaled(mass_n) + second.scaled(sc.coupling);
}

Poly mirrored_elementary_apply(const Rational& alpha, long beta, const Poly& y) {
    if (beta < 0) throw DegenerateParameter("mirror requires a nonnegative integer order parameter");
    WeightedPoly w = WeightedPoly::canonical(0, Rational(beta + 1), y);
    for (long k = 0; k < beta + 2; ++k) w = w.derivative();
    w = w.shifted(alpha + Rational(beta + 2), 0);
    for (long k = 0; k < beta + 2; ++k) w = w.derivative();
    w = w.shifted(-alpha, 1);
    if (!w.is_zero() && (!w.nu().is_nonnegative_integer() || !w.mu().is_nonnegative_integer()))
        throw InternalNoncancellation("mirror pipeline left exponents (" + w.nu().str() + ", " + w.mu().str() + ")");
    return w.to_poly();
}

Poly mirrored_residual(long n, const Rational& alpha, long beta, const Rational& mass_m) {
    if (mass_m < 0) throw std::invalid_argument("negative mass");
    if (alpha <= -1) throw DegenerateParameter("alpha must exceed -1, got " + alpha.str());
    const JacobiParams jp{alpha, Rational(beta)};
    const Poly y = jacobi_type_poly(n, jp, MassParams(mass_m, 0));
    const Rational lambda_high = pochhammer(Rational(n), beta + 2) * pochhammer(Rational(n) + alpha, beta + 2);
    const Rational coupling = factorial(beta + 2) * pochhammer(alpha + 1, beta + 1);
    const Poly high = mirrored_elementary_apply(alpha, beta, y) - y.scaled(lambda_high);
    const Poly second = jacobi_operator(jp).apply(y) - y.scaled(lambda2(n, jp));
    return high.scaled(mass_m) + second.scaled(coupling);
}

std::pair<Poly, Poly> kernel_identity_residuals(long n, const HighOpParams& prm) {
    if (n < 1) throw std::invalid_argument("kernel identities require n >= 1");
    const JacobiParams jp{Rational(prm.alpha), prm.beta};
    const SpectralConstants sc = spectral_constants(n, prm, 0);
    const Poly rn = modifier_r(n, jp);
    const Poly pn = jacobi_poly(n, jp);
    const Poly shifted = jacobi_poly(n - 1, {Rational(prm.alpha + 2), prm.beta});
    const Rational multiple =
        Rational((prm.alpha + 1) * (prm.alpha + 2)) / (Rational(n) * Rational(n + prm.alpha + 1));

    const Poly first = (jacobi_operator(jp).apply(rn) - rn.scaled(sc.lambda_two)).scaled(sc.coupling) -
                       shifted.scaled(sc.lambda_high * multiple);
    const Poly second = elementary_apply(prm, pn) - (pn - shifted.scaled(multiple)).scaled(sc.lambda_high);
    return {first, second};
}

}  // namespace jacobitype
