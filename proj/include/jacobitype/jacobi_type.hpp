#pragma once

#include "jacobitype/jacobi.hpp"
#include "jacobitype/poly.hpp"

namespace jacobitype {

/// Point masses at the interval endpoints: m at -1, n at +1.  Only one mass
/// may be positive (the one-mass polynomials are defined under m*n = 0).
struct MassParams {
    MassParams(Rational m_at_minus_one, Rational n_at_plus_one);

    Rational m;
    Rational n;
};

/// Coefficient A_n^{alpha,beta} = (alpha+2)_{n-1} (alpha+beta+2)_n /
/// [2 n! (beta+1)_{n-1}] scaling the endpoint modifiers, n >= 1.
///
/// Throws DegenerateParameter when the denominator Pochhammer vanishes
/// (never happens for beta > -1).
Rational modifier_coefficient(long n, const JacobiParams& prm);

/// R_n = A_n^{alpha,beta} (x-1) P_{n-1}^{alpha+2,beta}, the modifier attached
/// to the mass at +1; R_0 = 0 and R_n(1) = 0.
Poly modifier_r(long n, const JacobiParams& prm);

/// Q_n = A_n^{beta,alpha} (x+1) P_{n-1}^{alpha,beta+2}, the mirror modifier
/// attached to the mass at -1; Q_0 = 0 and Q_n(-1) = 0.
Poly modifier_q(long n, const JacobiParams& prm);

/// Jacobi-type polynomial P_n + M Q_n + N R_n, orthogonal for the Jacobi
/// weight plus one endpoint mass; reduces to jacobi_poly when both masses
/// vanish.
Poly jacobi_type_poly(long n, const JacobiParams& prm, const MassParams& mass);

}  // namespace jacobitype
