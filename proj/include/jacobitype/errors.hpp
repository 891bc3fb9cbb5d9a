#pragma once

#include <stdexcept>
#include <string>

namespace jacobitype {

// Common base for all contract violations raised by this library, so that
// callers can distinguish them from plain std exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

// to_poly() of a weighted polynomial whose exponents are fractional or negative.
struct NonIntegerExponent : Error {
    using Error::Error;
};

// Operator coefficient denominator has roots other than +1/-1; the weighted
// representation cannot absorb it.
struct UnsupportedDenominator : Error {
    using Error::Error;
};

// A lower parameter of a terminating hypergeometric sum hits a nonpositive
// integer inside the summation range.
struct PoleInLowerParameter : Error {
    using Error::Error;
};

// No upper parameter is a nonpositive integer, so the sum does not terminate.
struct NonTerminatingSeries : Error {
    using Error::Error;
};

struct DegenerateParameter : Error {
    using Error::Error;
};

struct BothMassesPositive : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// The elementary pipeline ended with fractional or negative exponents that
// should have cancelled; signals an implementation bug, not a user error.
struct InternalNoncancellation : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    using Error::Error;
};

struct InvalidGrid : Error {
    using Error::Error;
};

}  // namespace jacobitype
