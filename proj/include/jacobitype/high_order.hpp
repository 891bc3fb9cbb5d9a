#pragma once

#include <utility>

#include "jacobitype/diff_op.hpp"
#include "jacobitype/jacobi.hpp"

namespace jacobitype {

/// Parameters of the order-(2*alpha+4) Jacobi-type operator: alpha must be a
/// nonnegative integer, beta rational with beta > -1.
struct HighOpParams {
    HighOpParams(long alpha_in, Rational beta_in);

    long alpha;
    Rational beta;

    long order() const { return 2 * alpha + 4; }
};

/// The four scalar constants of the spectral equation: the high-order
/// eigenvalue (n)_{alpha+2} (n+beta)_{alpha+2}, the second-order eigenvalue
/// n(n+alpha+beta+1), the coupling constant (alpha+2)! (beta+1)_{alpha+1},
/// and the combined eigenvalue
///   [N (n+1)_{alpha+1} (n+beta)_{alpha+1} + (2)_{alpha+1} (beta+1)_{alpha+1}]
///     * n(n+alpha+beta+1),
/// which equals N*lambda_high + coupling*lambda_two.
struct SpectralConstants {
    Rational lambda_high;
    Rational lambda_two;
    Rational coupling;
    Rational combined;
};

// --- Route 1: closed-form coefficients -------------------------------------

/// Coefficient d_i of D^i in the order-(2*alpha+4) operator, 1 <= i <= order,
/// as the explicit double sum over ((x-1)/2)^{k+1} with a terminating 3F2
/// factor.  Every d_i vanishes at x = 1; the top one is (x^2-1)^{alpha+2}.
Poly explicit_coefficient(long i, const HighOpParams& prm);

/// The same coefficient via the alternative single sum obtained from a
/// Leibniz expansion of the elementary representation; must agree with
/// explicit_coefficient for every i.
Poly leibniz_coefficient(long i, const HighOpParams& prm);

/// Assembles d_1 .. d_{2*alpha+4} into the operator (no order-0 term).
DiffOp explicit_operator(const HighOpParams& prm);

// --- Route 2: elementary representation ------------------------------------

/// Action form of the operator:
///   ((x-1)/(x+1)^beta) D^{alpha+2} { (x+1)^{alpha+beta+2}
///                                    D^{alpha+2} [ (x-1)^{alpha+1} y ] }.
/// Runs through the weighted pipeline; fractional (x+1)-exponents appear
/// transiently for non-integer beta and must cancel, otherwise
/// InternalNoncancellation is thrown.
Poly elementary_apply(const HighOpParams& prm, const Poly& y);

/// Recovers the operator from elementary_apply by acting on monomials
/// x^0 .. x^order and solving the triangular system for the coefficients.
DiffOp elementary_operator(const HighOpParams& prm);

// --- Routes 3-5: factorizations ---------------------------------------------

/// One commuting factor L2^{alpha,beta} - 2(alpha+1)/(x-1) + j(alpha+beta+1-j);
/// the factors share their operator part and differ by constants only.
DiffOp bavinck_factor(const HighOpParams& prm, long j);

/// Product of the alpha+2 commuting factors (order immaterial), expanded via
/// symbolic composition; the final coefficients are polynomial.
DiffOp bavinck_operator(const HighOpParams& prm);

/// One factor of the ordered factorization:
///   L2^{2j-1,beta} - 4j/(x-1) + j(j+beta),
/// with L2^{2j-1,beta} = (x^2-1)D^2 + [2j-beta-1+(2j+beta+1)x]D.
/// At j = 0 this is the singular-free base operator
/// (x^2-1)D^2 + (beta+1)(x-1)D.
DiffOp ordered_factor(const HighOpParams& prm, long j);

/// Ordered (non-commuting) factorization, composed with j = 0 applied first
/// (innermost) up to j = alpha+1.
DiffOp factorized_operator(const HighOpParams& prm);

/// Builds the operator by the order recurrence: starting from the base
/// operator (x^2-1)D^2 + (beta+1)(x-1)D, repeatedly composes the outer
/// factor of the next even order on the left.
DiffOp recurrence_operator(const HighOpParams& prm);

// --- Spectral equation -------------------------------------------------------

SpectralConstants spectral_constants(long n, const HighOpParams& prm, const Rational& mass_n);

/// Left side of the spectral equation
///   N {L_high - lambda_high} y + C {L_2 - lambda_two} y
/// at y = jacobi_type_poly(n, prm, {0, N}); the zero polynomial when the
/// eigen-equation holds.
Poly full_residual(long n, const HighOpParams& prm, const Rational& mass_n);

/// Mirror action form for a mass at -1 (order parameter beta a nonnegative
/// integer, alpha rational > -1):
///   ((x+1)/(x-1)^alpha) D^{beta+2} { (x-1)^{alpha+beta+2}
///                                    D^{beta+2} [ (x+1)^{beta+1} y ] }.
Poly mirrored_elementary_apply(const Rational& alpha, long beta, const Poly& y);

/// Residual of the mirrored spectral equation of order 2*beta+4 at
/// y = jacobi_type_poly(n, {alpha, beta}, {M, 0}).
Poly mirrored_residual(long n, const Rational& alpha, long beta, const Rational& mass_m);

/// Residuals of the two kernel identities tying the operator to the endpoint
/// modifier R_n and the plain Jacobi polynomial P_n:
///   first:  C {L_2 - lambda_two} R_n
///             - lambda_high * ((alpha+1)(alpha+2)/(n(n+alpha+1))) * P_{n-1}^{alpha+2,beta}
///   second: L_high P_n - lambda_high {P_n - same multiple of P_{n-1}^{alpha+2,beta}}
/// Both must be the zero polynomial for n >= 1.
std::pair<Poly, Poly> kernel_identity_residuals(long n, const HighOpParams& prm);

}  // namespace jacobitype
