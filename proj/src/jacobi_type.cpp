#include "jacobitype/jacobi_type.hpp"

#include "jacobitype/special.hpp"

namespace jacobitype {

MassParams::MassParams(Rational m_at_minus_one, Rational n_at_plus_one)
    : m(std::move(m_at_minus_one)), n(std::move(n_at_plus_one)) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative point mass");
    if (!m.is_zero() && !n.is_zero())
        throw BothMassesPositive("one-mass polynomials require M*N = 0, got M=" + m.str() + " N=" + n.str());
}

Rational modifier_coefficient(long n, const JacobiParams& prm) {
    if (n < 1) throw std::invalid_argument("modifier coefficient requires n >= 1");
    const Rational den = pochhammer(prm.beta + 1, n - 1);
    if (den.is_zero())
        throw DegenerateParameter("modifier coefficient undefined: (beta+1)_{n-1} = 0 for beta = " + prm.beta.str());
    return pochhammer(prm.alpha + 2, n - 1) * pochhammer(prm.alpha + prm.beta + 2, n) / (Rational(2) * factorial(n) * den);
}

Poly modifier_r(long n, const JacobiParams& prm) {
    if (n == 0) return {};
    const Poly shifted = jacobi_poly(n - 1, {prm.alpha + 2, prm.beta});
    return (Poly{-1, 1} * shifted).scaled(modifier_coefficient(n, prm));
}

Poly modifier_q(long n, const JacobiParams& prm) {
    if (n == 0) return {};
    const Poly shifted = jacobi_poly(n - 1, {prm.alpha, prm.beta + 2});
    return (Poly{1, 1} * shifted).scaled(modifier_coefficient(n, {prm.beta, prm.alpha}));
}

Poly jacobi_type_poly(long n, const JacobiParams& prm, const MassParams& mass) {
    Poly p = jacobi_poly(n, prm);
    if (!mass.m.is_zero()) p += modifier_q(n, prm).scaled(mass.m);
    if (!mass.n.is_zero()) p += modifier_r(n, prm).scaled(mass.n);
    return p;
}

}  // namespace jacobitype
