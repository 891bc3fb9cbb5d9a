#pragma once

#include "jacobitype/diff_op.hpp"
#include "jacobitype/poly.hpp"

namespace jacobitype {

/// Symmetric ultraspherical-type action (x^2-1) D^{2*alpha+4} [(x^2-1)^{alpha+1} y].
Poly ultra_apply(long alpha, const Poly& y);

/// Eigenvalue (m-1)_{2*alpha+4} of the ultraspherical-type operator.
Rational ultra_lambda_high(long m, long alpha);

/// Eigenvalue m(m+2*alpha+1) of the second-order part L2^{alpha,alpha}.
Rational ultra_lambda_two(long m, long alpha);

/// Coupling constant (alpha+2)(2*alpha+2)!/2 of the ultraspherical-type
/// spectral equation.
Rational ultra_coupling(long alpha);

/// Residual of the link identity
///   L_ultra[(x+1) y] = (x+1) L_jacobitype^{alpha, alpha+2} y;
/// the zero polynomial for every polynomial y.
Poly link_residual(long alpha, const Poly& y);

/// Bessel derivative x^{-1} D, acting on Laurent polynomials.
Poly bessel_delta(const Poly& f);

/// Substitutes 2x^2 - 1 for the variable (exact Horner composition).
Poly compose_quadratic(const Poly& y);

/// Residuals of the quadratic-substitution identities; both components must
/// be the zero polynomial for arbitrary polynomial y.
struct SubstitutionResiduals {
    Poly high_order;
    Poly second_order;
};

/// Even case: with u(t) = y(2t^2-1),
///   high:   L_ultra,t [u] - 2^{2*alpha+4} (L_high^{alpha,-1/2} y)(2t^2-1)
///   second: L2^{alpha,alpha}_t [u] - 4 (L2^{alpha,-1/2} y)(2t^2-1).
SubstitutionResiduals substitution_residual_even(long alpha, const Poly& y);

/// Odd case: with v(t) = t * y(2t^2-1),
///   high:   2^{2*alpha+4} t (L_high^{alpha,1/2} y)(2t^2-1) - L_ultra,t [v]
///   second: 4 t (L2^{alpha,1/2} y)(2t^2-1) - {L2^{alpha,alpha}_t - 2(alpha+1)} [v].
SubstitutionResiduals substitution_residual_odd(long alpha, const Poly& y);

}  // namespace jacobitype
