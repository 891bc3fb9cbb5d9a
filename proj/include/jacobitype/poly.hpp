#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "jacobitype/rational.hpp"

namespace jacobitype {

/// Dense univariate polynomial over Rational with an optional negative
/// minimum exponent (Laurent support).
///
/// Canonical form: the highest stored coefficient is nonzero; min_exp() <= 0,
/// and when min_exp() < 0 the lowest stored coefficient is nonzero as well
/// (ordinary polynomials are stored dense from exponent 0).  The zero
/// polynomial has no coefficients and min_exp() = 0.  Equality is structural.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    Poly(std::initializer_list<Rational> coeffs);  // ascending from exponent 0

    static Poly from_coeffs(std::vector<Rational> coeffs, long min_exp = 0);
    static Poly monomial(const Rational& c, long exp);
    static Poly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Exponent of the lowest stored coefficient (0 for the zero polynomial).
    long min_exp() const { return min_exp_; }
    /// Exponent of the highest nonzero coefficient; -1 for the zero polynomial.
    long degree() const { return is_zero() ? -1 : min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    bool has_negative_exponents() const { return min_exp_ < 0; }

    Rational coeff(long exp) const;
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    /// Coefficients of x^0 .. x^degree for an ordinary polynomial.
    std::vector<Rational> dense_coeffs() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const Rational& c) const;
    Poly shifted(long dexp) const;  // multiply by x^dexp
    Poly pow(long e) const;

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    /// Substitution: this(g(x)); both must be ordinary polynomials.
    Poly compose(const Poly& g) const;
    /// x -> -x.
    Poly reflected() const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();

    long min_exp_ = 0;
    std::vector<Rational> coeffs_;  // dense from min_exp_ upward
};

/// Quotient and remainder; both operands must be ordinary polynomials and the
/// divisor nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor by the classical Euclid over exact rationals.
Poly gcd(Poly a, Poly b);

}  // namespace jacobitype
