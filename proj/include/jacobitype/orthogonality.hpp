#pragma once

#include <vector>

#include "jacobitype/poly.hpp"

namespace jacobitype {

/// Inner product data: normalized Jacobi weight with parameters
/// alpha, beta > -1 plus a point mass N >= 0 at +1.
struct InnerProductSpec {
    InnerProductSpec(Rational alpha_in, Rational beta_in, Rational mass_in);

    Rational alpha;
    Rational beta;
    Rational mass;  // at +1
};

/// Normalized moment h^{-1} * integral of (1-x)^alpha (1+x)^(beta+j) over
/// [-1,1], reduced to the rational closed form 2^j (beta+1)_j / (alpha+beta+2)_j.
Rational normalized_moment(long j, const Rational& alpha, const Rational& beta);

/// h^{-1} * integral of p(x) (1-x)^alpha (1+x)^beta over [-1,1], computed by
/// expanding p in powers of (x+1) and summing normalized moments.
Rational weighted_integral(const Poly& p, const Rational& alpha, const Rational& beta);

/// (f, g) = h^{-1} integral of f g w + N f(1) g(1), exactly.
Rational inner_product(const Poly& f, const Poly& g, const InnerProductSpec& spec);

/// The two boundary integrals entering the symmetry argument:
///   S = h^{-1} integral of D^{alpha+2}[(x-1)^{alpha+1} f]
///                        * D^{alpha+2}[(x-1)^{alpha+1} g] * (x+1)^{alpha+beta+2},
///   T = h^{-1} integral of f' g' (1-x)^{alpha+1} (1+x)^{beta+1}.
/// S requires alpha to be a nonnegative integer for its moments to be rational.
struct BoundaryForms {
    Rational s;
    Rational t;
};

BoundaryForms boundary_forms(const Poly& f, const Poly& g, const InnerProductSpec& spec);

/// (Lf, g) - (f, Lg) for the combined operator L = N L_high + C L_2 under the
/// mass-extended inner product; zero when the operator is symmetric.
/// Requires alpha to be a nonnegative integer.
Rational symmetry_defect(const Poly& f, const Poly& g, const InnerProductSpec& spec);

/// Combined operator action N * L_high f + C * L_2 f.
Poly combined_operator_apply(const Poly& f, const InnerProductSpec& spec);

/// Matrix of pairwise inner products of the first n_max+1 one-mass
/// polynomials; diagonal positive, off-diagonal exactly zero.
std::vector<std::vector<Rational>> gram_matrix(long n_max, const InnerProductSpec& spec);

}  // namespace jacobitype
