#pragma once

#include <map>
#include <string>

#include "jacobitype/rat_func.hpp"
#include "jacobitype/weighted_poly.hpp"

namespace jacobitype {

/// Linear differential operator sum_i c_i(x) D^i with rational-function
/// coefficients, stored as a finite map from derivative order to coefficient.
/// Zero coefficients are never stored.
class DiffOp {
public:
    DiffOp() = default;  // zero operator

    static DiffOp identity() { return with_term(0, RatFunc(Poly(Rational(1)))); }
    static DiffOp derivative(long order = 1) { return with_term(order, RatFunc(Poly(Rational(1)))); }
    static DiffOp with_term(long order, RatFunc coeff);

    DiffOp& add_term(long order, const RatFunc& coeff);

    const std::map<long, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(long order) const;
    bool is_zero() const { return terms_.empty(); }
    long order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    bool polynomial_coefficients() const;

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    DiffOp scaled(const Rational& c) const;
    /// Adds c times the identity.
    DiffOp plus_constant(const Rational& c) const;

    WeightedPoly apply(const WeightedPoly& w) const;
    /// Applies through the weighted pipeline; the result must come out as a
    /// plain polynomial (singular coefficients must cancel exactly).
    Poly apply(const Poly& p) const;

    friend bool operator==(const DiffOp& a, const DiffOp& b) = default;

    std::string str() const;

private:
    std::map<long, RatFunc> terms_;
};

/// Operator composition (A then-applied-after B) by the Leibniz rule:
///   (c D^i) o (d D^j) = sum_k C(i,k) c d^(k) D^(i+j-k).
DiffOp compose(const DiffOp& a, const DiffOp& b);

}  // namespace jacobitype
