#pragma once

#include <string>

#include "jacobitype/poly.hpp"
#include "jacobitype/rational.hpp"

namespace jacobitype {

class RatFunc;

/// Expression (x-1)^nu (x+1)^mu p(x) with rational exponents nu, mu; closed
/// under differentiation.
///
/// Canonical form: every root of p at +1 or -1 is absorbed into the
/// exponents, so p(1) != 0 and p(-1) != 0 and equality is structural.  The
/// zero element is (0, 0, 0).
class WeightedPoly {
public:
    WeightedPoly() = default;  // zero

    /// Builds the canonical form: repeatedly divides p by (x-1) and (x+1)
    /// while divisible, incrementing nu/mu accordingly.
    static WeightedPoly canonical(const Rational& nu, const Rational& mu, Poly p);

    bool is_zero() const { return body_.is_zero(); }
    const Rational& nu() const { return nu_; }
    const Rational& mu() const { return mu_; }
    const Poly& body() const { return body_; }

    /// Closed-form product rule:
    ///   D[(x-1)^nu (x+1)^mu p]
    ///     = (x-1)^(nu-1) (x+1)^(mu-1) [nu(x+1)p + mu(x-1)p + (x^2-1)p'].
    /// Each exponent drops by at most 1; the result is canonical.
    WeightedPoly derivative() const;

    /// Expanded polynomial; requires nu and mu to be nonnegative integers.
    Poly to_poly() const;

    /// Multiplies by (x-1)^dnu (x+1)^dmu.
    WeightedPoly shifted(const Rational& dnu, const Rational& dmu) const;

    WeightedPoly times(const Poly& q) const;
    WeightedPoly times(const Rational& c) const;
    /// Multiplies by a rational-function coefficient.  The denominator must
    /// be a product of powers of (x-1) and (x+1); anything else throws
    /// UnsupportedDenominator.
    WeightedPoly times(const RatFunc& c) const;

    /// Sum; the exponent differences must be integers (they always are for
    /// terms produced from a common expression by differentiation and
    /// coefficient multiplication).
    friend WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b);

    friend bool operator==(const WeightedPoly& a, const WeightedPoly& b) = default;

    std::string str() const;

private:
    Rational nu_, mu_;
    Poly body_;
};

}  // namespace jacobitype
