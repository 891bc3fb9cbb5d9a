#pragma once

#include "jacobitype/diff_op.hpp"
#include "jacobitype/poly.hpp"

namespace jacobitype {

/// Parameter pair (alpha, beta).  Orthogonality contexts require both > -1;
/// the polynomial itself is defined for any rational parameters and is used
/// with shifted values (alpha+2, 2j+1, -beta, ...) as a building block.
struct JacobiParams {
    Rational alpha;
    Rational beta;
};

/// Degree-n Jacobi polynomial built from its terminating hypergeometric
/// definition, with exact rational coefficients; value at x = 1 equals
/// (alpha+1)_n / n!.
///
/// Throws DegenerateParameter when alpha is an integer in {-1, ..., -n}
/// (the hypergeometric prefactor/denominator degenerates there).
Poly jacobi_poly(long n, const JacobiParams& prm);

/// Second-order Jacobi operator (x^2-1)D^2 + [alpha-beta+(alpha+beta+2)x]D.
DiffOp jacobi_operator(const JacobiParams& prm);

/// Eigenvalue n(n+alpha+beta+1) of the second-order operator.
Rational lambda2(long n, const JacobiParams& prm);

}  // namespace jacobitype
