#include "jacobitype/jacobi.hpp"

#include "jacobitype/special.hpp"

namespace jacobitype {

Poly jacobi_poly(long n, const JacobiParams& prm) {
    if (n < 0) throw std::invalid_argument("negative degree");
    const Rational& a = prm.alpha;
    const Rational& b = prm.beta;
    if (a.is_integer() && a <= -1 && a >= Rational(-n))
        throw DegenerateParameter("jacobi polynomial with alpha = " + a.str() + " and n = " + std::to_string(n));

    const Poly z{Rational(1, 2), Rational(-1, 2)};  // (1-x)/2
    Poly zpow(Rational(1));
    Rational term = pochhammer(a + 1, n) / factorial(n);
    Poly result;
    for (long m = 0; m <= n; ++m) {
        result += zpow.scaled(term);
        if (m < n) {
            term *= (Rational(-n + m) * (Rational(n + m) + a + b + 1)) / ((a + Rational(1 + m)) * Rational(m + 1));
            zpow = zpow * z;
        }
    }
    return result;
}

DiffOp jacobi_operator(const JacobiParams& prm) {
    DiffOp op;
    op.add_term(2, RatFunc(Poly{-1, 0, 1}));
    op.add_term(1, RatFunc(Poly{prm.alpha - prm.beta, prm.alpha + prm.beta + 2}));
    return op;
}

Rational lambda2(long n, const JacobiParams& prm) {
    return Rational(n) * (Rational(n) + prm.alpha + prm.beta + 1);
}

}  // namespace jacobitype
