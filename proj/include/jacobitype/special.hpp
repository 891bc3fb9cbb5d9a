#pragma once

#include <vector>

#include "jacobitype/rational.hpp"

namespace jacobitype {

/// Rising factorial a(a+1)...(a+k-1); the empty product (k = 0) is 1.
Rational pochhammer(const Rational& a, long k);

Rational factorial(long n);

/// Binomial coefficient for integer arguments; zero when k < 0 or k > n.
Rational binomial(long n, long k);

/// A terminating generalized hypergeometric sum at unit argument.  One upper
/// parameter must be a nonpositive integer -k; the sum is truncated there.
struct HypSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
};

/// Sum_{m=0}^{k} prod(upper)_m / (prod(lower)_m * m!), exactly.
///
/// Throws PoleInLowerParameter if a lower parameter is a nonpositive integer
/// >= -(k-1): that makes a denominator factor vanish inside the truncated
/// range, which the parameter patterns in scope never do, so it signals a
/// caller bug rather than a removable zero.
Rational hyp_terminating(const HypSpec& spec);

}  // namespace jacobitype
