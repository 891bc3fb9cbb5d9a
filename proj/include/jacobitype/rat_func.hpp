#pragma once

#include <string>

#include "jacobitype/poly.hpp"

namespace jacobitype {

/// Normalized quotient of two ordinary polynomials: gcd-reduced, monic
/// denominator.  Zero is 0/1.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(Poly num) : RatFunc(std::move(num), Poly(Rational(1))) {}  // NOLINT
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    const Poly& as_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);

    RatFunc scaled(const Rational& c) const;
    RatFunc derivative() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    std::string str() const;

private:
    Poly num_, den_;
};

}  // namespace jacobitype
