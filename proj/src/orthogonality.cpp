#include "jacobitype/orthogonality.hpp"

#include "jacobitype/high_order.hpp"
#include "jacobitype/jacobi_type.hpp"
#include "jacobitype/special.hpp"
#include "jacobitype/weighted_poly.hpp"

namespace jacobitype {

namespace {

// Coefficients of p in powers of (x+1), by repeated division.
std::vector<Rational> expand_in_x_plus_1(Poly p) {
    const Poly xp1{1, 1};
    std::vector<Rational> out;
    if (p.is_zero()) return out;
    while (!p.is_zero()) {
        auto [q, r] = divmod(p, xp1);
        out.push_back(r.coeff(0));
        p = std::move(q);
    }
    return out;
}

long require_small_index(const Rational& alpha) {
    if (!alpha.is_nonnegative_integer())
        throw DegenerateParameter("this form requires a nonnegative integer alpha, got " + alpha.str());
    return alpha.to_long();
}

}  // namespace

InnerProductSpec::InnerProductSpec(Rational alpha_in, Rational beta_in, Rational mass_in)
    : alpha(std::move(alpha_in)), beta(std::move(beta_in)), mass(std::move(mass_in)) {
    if (alpha <= -1 || beta <= -1)
        throw DegenerateParameter("weight parameters must exceed -1, got (" + alpha.str() + ", " + beta.str() + ")");
    if (mass < 0) throw std::invalid_argument("negative point mass");
}

Rational normalized_moment(long j, const Rational& alpha, const Rational& beta) {
    if (j < 0) throw std::invalid_argument("negative moment index");
    if (alpha <= -1 || beta <= -1)
        throw DegenerateParameter("weight parameters must exceed -1, got (" + alpha.str() + ", " + beta.str() + ")");
    return Rational(2).pow(j) * pochhammer(beta + 1, j) / pochhammer(alpha + beta + 2, j);
}

Rational weighted_integral(const Poly& p, const Rational& alpha, const Rational& beta) {
    Rational acc = 0;
    long j = 0;
    for (const auto& c : expand_in_x_plus_1(p)) {
        if (!c.is_zero()) acc += c * normalized_moment(j, alpha, beta);
        ++j;
    }
    return acc;
}

Rational inner_product(const Poly& f, const Poly& g, const InnerProductSpec& spec) {
    Rational value = weighted_integral(f * g, spec.alpha, spec.beta);
    if (!spec.mass.is_zero()) value += spec.mass * f.eval(1) * g.eval(1);
    return value;
}

BoundaryForms boundary_forms(const Poly& f, const Poly& g, const InnerProductSpec& spec) {
    const long a = require_small_index(spec.alpha);
    const Rational& b = spec.beta;

    // u = D^{alpha+2}[(x-1)^{alpha+1} f], a plain polynomial.
    const auto lifted_derivative = [&](const Poly& p) {
        WeightedPoly w = WeightedPoly::canonical(Rational(a + 1), 0, p);
        for (long k = 0; k < a + 2; ++k) w = w.derivative();
        return w.to_poly();
    };
    const Poly product = lifted_derivative(f) * lifted_derivative(g);

    // h^{-1} integral of (1+x)^{alpha+beta+2+j} over [-1,1]; rational because
    // alpha is an integer.
    const auto s_moment = [&](long j) {
        return Rational(2).pow(j + 2) * pochhammer(b + 1, a + 1) /
               (factorial(a) * (Rational(a + 3 + j) + b));
    };
    Rational s = 0;
    long j = 0;
    for (const auto& c : expand_in_x_plus_1(product)) {
        if (!c.is_zero()) s += c * s_moment(j);
        ++j;
    }

    // T reduces to a weighted integral of f' g' (1-x^2) against the plain weight.
    const Poly one_minus_x2{1, 0, -1};
    const Rational t = weighted_integral(f.derivative() * g.derivative() * one_minus_x2, spec.alpha, spec.beta);
    return {s, t};
}

Poly combined_operator_apply(const Poly& f, const InnerProductSpec& spec) {
    const HighOpParams prm(require_small_index(spec.alpha), spec.beta);
    const Rational coupling = factorial(prm.alpha + 2) * pochhammer(prm.beta + 1, prm.alpha + 1);
    return elementary_apply(prm, f).scaled(spec.mass) +
           jacobi_operator({spec.alpha, spec.beta}).apply(f).scaled(coupling);
}

Rational symmetry_defect(const Poly& f, const Poly& g, const InnerProductSpec& spec) {
    return inner_product(combined_operator_apply(f, spec), g, spec) -
           inner_product(f, combined_operator_apply(g, spec), spec);
}

std::vector<std::vector<Rational>> gram_matrix(long n_max, const InnerProductSpec& spec) {
    if (n_max < 0) throw std::invalid_argument("negative matrix size");
    const JacobiParams jp{spec.alpha, spec.beta};
    std::vector<Poly> basis;
    basis.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) basis.push_back(jacobi_type_poly(n, jp, MassParams(0, spec.mass)));

    std::vector<std::vector<Rational>> gram(basis.size(), std::vector<Rational>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            gram[i][j] = inner_product(basis[i], basis[j], spec);
            gram[j][i] = gram[i][j];
        }
    return gram;
}

}  // namespace jacobitype
