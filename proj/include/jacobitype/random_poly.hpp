#pragma once

#include <random>

#include "jacobitype/poly.hpp"

namespace jacobitype {

/// Deterministic test-input sampler.  Uses raw mt19937_64 output (the engine
/// is fully specified, distributions are not), so identical seeds yield
/// identical polynomials on every platform.
class PolySampler {
public:
    explicit PolySampler(unsigned long seed) : eng_(seed) {}

    long next_index(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<unsigned long>(hi - lo + 1));
    }

    /// Uniform over {-9, ..., 9}.
    Rational next_coefficient() { return Rational(next_index(-9, 9)); }

    Rational next_nonzero_coefficient() {
        Rational c = next_coefficient();
        while (c.is_zero()) c = next_coefficient();
        return c;
    }

    /// Random polynomial of degree <= max_degree with a nonzero leading term.
    Poly next_poly(long max_degree) {
        const long deg = next_index(0, max_degree);
        std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1);
        for (long e = 0; e < deg; ++e) coeffs[static_cast<std::size_t>(e)] = next_coefficient();
        coeffs[static_cast<std::size_t>(deg)] = next_nonzero_coefficient();
        return Poly::from_coeffs(std::move(coeffs));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace jacobitype
