#include "jacobitype/special.hpp"

#include <limits>
#include <stdexcept>

namespace jacobitype {

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer with negative length");
    Rational prod = 1;
    Rational term = a;
    for (long i = 0; i < k; ++i) {
        prod *= term;
        if (prod.is_zero()) return prod;
        term += 1;
    }
    return prod;
}

Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    return pochhammer(1, n);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Rational num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= Rational(n - i);
        den *= Rational(i + 1);
    }
    return num / den;
}

Rational hyp_terminating(const HypSpec& spec) {
    // Truncation index: the first upper parameter chain to hit zero wins.
    long k = std::numeric_limits<long>::max();
    for (const auto& a : spec.upper)
        if (a.is_integer() && a <= 0) k = std::min(k, (-a).to_long());
    if (k == std::numeric_limits<long>::max())
        throw NonTerminatingSeries("no nonpositive-integer upper parameter");

    for (const auto& c : spec.lower)
        if (c.is_integer() && c <= 0 && c >= Rational(-(k - 1)))
            throw PoleInLowerParameter("lower parameter " + c.str() +
                                       " vanishes inside truncated range (k=" + std::to_string(k) + ")");

    // Term-recursive ratio update avoids recomputing factorials.
    Rational sum = 1, term = 1;
    for (long m = 0; m < k; ++m) {
        Rational ratio = 1;
        for (const auto& a : spec.upper) ratio *= a + Rational(m);
        for (const auto& c : spec.lower) ratio /= c + Rational(m);
        ratio /= Rational(m + 1);
        term *= ratio;
        sum += term;
    }
    return sum;
}

}  // namespace jacobitype
