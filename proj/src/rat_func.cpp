#include "jacobitype/rat_func.hpp"

#include <stdexcept>

namespace jacobitype {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.has_negative_exponents() || den.has_negative_exponents())
        throw std::invalid_argument("rational function over ordinary polynomials only");
    if (num.is_zero()) {
        num_ = Poly{};
        den_ = Poly(Rational(1));
        return;
    }
    const Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    const Rational lc = den.leading().inverse();
    num_ = num.scaled(lc);
    den_ = den.scaled(lc);
}

const Poly& RatFunc::as_poly() const {
    if (!is_polynomial()) throw std::logic_error("rational function " + str() + " is not a polynomial");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::scaled(const Rational& c) const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) r.den_ = Poly(Rational(1));
    return r;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace jacobitype
