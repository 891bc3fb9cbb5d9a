#include "jacobitype/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jacobitype {

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::from_coeffs(std::vector<Rational> coeffs, long min_exp) {
    Poly p;
    p.min_exp_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

Poly Poly::monomial(const Rational& c, long exp) { return from_coeffs({c}, exp); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t drop = 0;
    while (min_exp_ + static_cast<long>(drop) < 0 && drop < coeffs_.size() && coeffs_[drop].is_zero()) ++drop;
    if (drop > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
        min_exp_ += static_cast<long>(drop);
    }
    if (coeffs_.empty()) {
        min_exp_ = 0;
        return;
    }
    if (min_exp_ > 0) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_), Rational(0));
        min_exp_ = 0;
    }
}

Rational Poly::coeff(long exp) const {
    const long idx = exp - min_exp_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

std::vector<Rational> Poly::dense_coeffs() const {
    if (has_negative_exponents()) throw std::invalid_argument("dense_coeffs of a Laurent polynomial");
    if (is_zero()) return {Rational(0)};
    return coeffs_;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long lo = std::min(min_exp_, o.min_exp_);
    const long hi = std::max(degree(), o.degree());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (long e = min_exp_; e <= degree(); ++e) out[static_cast<std::size_t>(e - lo)] = coeff(e);
    for (long e = o.min_exp_; e <= o.degree(); ++e) out[static_cast<std::size_t>(e - lo)] += o.coeff(e);
    min_exp_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly::from_coeffs(std::move(out), a.min_exp_ + b.min_exp_);
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    Poly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

Poly Poly::shifted(long dexp) const {
    if (is_zero()) return {};
    return from_coeffs(coeffs_, min_exp_ + dexp);
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly r(Rational(1));
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative() const {
    if (is_zero()) return {};
    Poly r;
    r.min_exp_ = min_exp_ - 1;
    r.coeffs_.assign(coeffs_.size(), Rational(0));
    for (long e = min_exp_; e <= degree(); ++e) {
        if (e == 0) continue;
        r.coeffs_[static_cast<std::size_t>(e - min_exp_)] = coeff(e) * Rational(e);
    }
    r.normalize();
    return r;
}

Rational Poly::eval(const Rational& x) const {
    if (is_zero()) return 0;
    if (has_negative_exponents()) {
        if (x.is_zero()) throw std::domain_error("Laurent polynomial evaluated at zero");
        Rational acc = 0, xp = x.pow(min_exp_);
        for (const auto& c : coeffs_) {
            acc += c * xp;
            xp *= x;
        }
        return acc;
    }
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& g) const {
    if (has_negative_exponents() || g.has_negative_exponents())
        throw std::invalid_argument("compose requires ordinary polynomials");
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + Poly(*it);
    return acc;
}

Poly Poly::reflected() const {
    Poly r = *this;
    for (long e = r.min_exp_; e <= r.degree(); ++e)
        if (e % 2 != 0) r.coeffs_[static_cast<std::size_t>(e - r.min_exp_)] = -r.coeff(e);
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = degree(); e >= min_exp_; --e) {
        const Rational c = coeff(e);
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0 || mag != Rational(1)) os << mag.str();
        if (e != 0) {
            if (mag != Rational(1)) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    if (a.has_negative_exponents() || b.has_negative_exponents())
        throw std::invalid_argument("divmod requires ordinary polynomials");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly{}, a};

    std::vector<Rational> rem = a.dense_coeffs();
    const std::vector<Rational> div = b.dense_coeffs();
    const long db = b.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (long i = a.degree() - db; i >= 0; --i) {
        const Rational q = rem[static_cast<std::size_t>(i + db)] / div.back();
        quo[static_cast<std::size_t>(i)] = q;
        if (q.is_zero()) continue;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * div[static_cast<std::size_t>(j)];
    }
    return {Poly::from_coeffs(std::move(quo)), Poly::from_coeffs(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    const auto monic = [](Poly p) {
        return p.is_zero() ? p : p.scaled(p.leading().inverse());
    };
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

}  // namespace jacobitype
