#include "jacobitype/weighted_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "jacobitype/rat_func.hpp"

namespace jacobitype {

namespace {

const Poly& x_minus_1() {
    static const Poly p{Rational(-1), Rational(1)};
    return p;
}

const Poly& x_plus_1() {
    static const Poly p{Rational(1), Rational(1)};
    return p;
}

// Divides out the maximal power of `factor` (a monic linear with root r).
long extract_root(Poly& p, const Poly& factor, const Rational& root) {
    long count = 0;
    while (!p.is_zero() && p.eval(root).is_zero()) {
        auto [q, rem] = divmod(p, factor);
        p = std::move(q);
        ++count;
    }
    return count;
}

}  // namespace

WeightedPoly WeightedPoly::canonical(const Rational& nu, const Rational& mu, Poly p) {
    if (p.has_negative_exponents())
        throw std::invalid_argument("weighted polynomial body must be an ordinary polynomial");
    WeightedPoly w;
    if (p.is_zero()) return w;
    w.nu_ = nu + Rational(extract_root(p, x_minus_1(), 1));
    w.mu_ = mu + Rational(extract_root(p, x_plus_1(), -1));
    w.body_ = std::move(p);
    return w;
}

WeightedPoly WeightedPoly::derivative() const {
    if (is_zero()) return {};
    Poly body = x_plus_1().scaled(nu_) * body_ + x_minus_1().scaled(mu_) * body_ +
                (x_minus_1() * x_plus_1()) * body_.derivative();
    return canonical(nu_ - 1, mu_ - 1, std::move(body));
}

Poly WeightedPoly::to_poly() const {
    if (is_zero()) return {};
    if (!nu_.is_nonnegative_integer() || !mu_.is_nonnegative_integer())
        throw NonIntegerExponent("weighted polynomial with exponents (" + nu_.str() + ", " + mu_.str() +
                                 ") is not a polynomial");
    return x_minus_1().pow(nu_.to_long()) * x_plus_1().pow(mu_.to_long()) * body_;
}

WeightedPoly WeightedPoly::shifted(const Rational& dnu, const Rational& dmu) const {
    if (is_zero()) return {};
    WeightedPoly w = *this;
    w.nu_ += dnu;
    w.mu_ += dmu;
    return w;
}

WeightedPoly WeightedPoly::times(const Poly& q) const {
    if (is_zero()) return {};
    return canonical(nu_, mu_, body_ * q);
}

WeightedPoly WeightedPoly::times(const Rational& c) const {
    if (is_zero() || c.is_zero()) return {};
    WeightedPoly w = *this;
    w.body_ = w.body_.scaled(c);
    return w;
}

WeightedPoly WeightedPoly::times(const RatFunc& c) const {
    if (is_zero() || c.is_zero()) return {};
    Poly den = c.den();
    const long a = extract_root(den, x_minus_1(), 1);
    const long b = extract_root(den, x_plus_1(), -1);
    if (den.degree() != 0)
        throw UnsupportedDenominator("coefficient denominator has roots other than +1/-1: " + c.den().str());
    // den was monic, so the leftover constant is exactly 1.
    return canonical(nu_ - Rational(a), mu_ - Rational(b), body_ * c.num());
}

WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Rational dnu = a.nu_ - b.nu_;
    const Rational dmu = a.mu_ - b.mu_;
    if (!dnu.is_integer() || !dmu.is_integer())
        throw std::logic_error("weighted sum with non-integer exponent gap");
    const Rational nu0 = std::min(a.nu_, b.nu_);
    const Rational mu0 = std::min(a.mu_, b.mu_);
    const auto lift = [&](const WeightedPoly& w) {
        return x_minus_1().pow((w.nu_ - nu0).to_long()) * x_plus_1().pow((w.mu_ - mu0).to_long()) * w.body_;
    };
    return WeightedPoly::canonical(nu0, mu0, lift(a) + lift(b));
}

std::string WeightedPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(x-1)^(" << nu_.str() << ") (x+1)^(" << mu_.str() << ") * [" << body_.str() << "]";
    return os.str();
}

}  // namespace jacobitype
