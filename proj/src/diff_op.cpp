#include "jacobitype/diff_op.hpp"

#include <sstream>
#include <stdexcept>

#include "jacobitype/special.hpp"

namespace jacobitype {

DiffOp DiffOp::with_term(long order, RatFunc coeff) {
    DiffOp op;
    op.add_term(order, coeff);
    return op;
}

DiffOp& DiffOp::add_term(long order, const RatFunc& coeff) {
    if (order < 0) throw std::invalid_argument("negative derivative order");
    if (coeff.is_zero()) return *this;
    auto it = terms_.find(order);
    if (it == terms_.end()) {
        terms_.emplace(order, coeff);
        return *this;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
    return *this;
}

RatFunc DiffOp::coeff(long order) const {
    auto it = terms_.find(order);
    return it == terms_.end() ? RatFunc{} : it->second;
}

bool DiffOp::polynomial_coefficients() const {
    for (const auto& [ord, c] : terms_)
        if (!c.is_polynomial()) return false;
    return true;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r = a;
    for (const auto& [ord, c] : b.terms_) r.add_term(ord, c);
    return r;
}

DiffOp DiffOp::scaled(const Rational& c) const {
    DiffOp r;
    if (c.is_zero()) return r;
    for (const auto& [ord, cf] : terms_) r.terms_.emplace(ord, cf.scaled(c));
    return r;
}

DiffOp DiffOp::plus_constant(const Rational& c) const {
    DiffOp r = *this;
    r.add_term(0, RatFunc(Poly(c)));
    return r;
}

WeightedPoly DiffOp::apply(const WeightedPoly& w) const {
    WeightedPoly acc;
    if (w.is_zero()) return acc;
    WeightedPoly der = w;
    long k = 0;
    for (const auto& [ord, c] : terms_) {
        while (k < ord) {
            der = der.derivative();
            ++k;
        }
        acc = acc + der.times(c);
    }
    return acc;
}

Poly DiffOp::apply(const Poly& p) const {
    return apply(WeightedPoly::canonical(0, 0, p)).to_poly();
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    for (const auto& [i, ca] : a.terms()) {
        for (const auto& [j, cb] : b.terms()) {
            RatFunc dk = cb;  // k-th derivative of b's coefficient
            for (long k = 0; k <= i; ++k) {
                r.add_term(i + j - k, (ca * dk).scaled(binomial(i, k)));
                if (k < i) dk = dk.derivative();
            }
        }
    }
    return r;
}

std::string DiffOp::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "[" << it->second.str() << "]";
        if (it->first > 0) os << " D^" << it->first;
    }
    return os.str();
}

}  // namespace jacobitype
