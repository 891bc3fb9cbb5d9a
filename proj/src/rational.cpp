#include "jacobitype/rational.hpp"

#include <ostream>

namespace jacobitype {

Rational::Rational(long n, long d) {
    if (d == 0) throw ZeroDenominator("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw ZeroDenominator("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    if (v.get_den() == 0) throw ZeroDenominator("rational with zero denominator: '" + std::string(s) + "'");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::invalid_argument("rational " + str() + " is not a small integer");
    return v_.get_num().get_si();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const bool invert = e < 0;
    const auto ue = static_cast<unsigned long>(invert ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    return invert ? Rational(d, n) : Rational(n, d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    return Rational(v_.get_den(), v_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace jacobitype
