#pragma once

#include <stdexcept>

namespace umbral {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational: reciprocal of zero / zero denominator.
struct ZeroDivision : Error {
    using Error::Error;
};

// Malformed "p/q" text.
struct ParseError : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// series_recip / negative powers of a series with a_0 = 0.
struct ZeroConstantTerm : Error {
    using Error::Error;
};

// series_log needs a_0 = 1, series_exp needs a_0 = 0, pow_rational needs a_0 = 1.
struct BadConstantTerm : Error {
    using Error::Error;
};

// shift_div_t over a nonzero low-order coefficient.
struct NonDivisible : Error {
    using Error::Error;
};

// A coefficient beyond the stored truncation order was requested.
struct TruncationTooShort : Error {
    using Error::Error;
};

// Sheffer machinery needs o(f) = 1 and o(g) = 0.
struct OrderViolation : Error {
    using Error::Error;
};

// Frobenius-Euler: lambda = 1 (or 0 / lambda^m = 1 where excluded).
struct LambdaForbidden : Error {
    using Error::Error;
};

// m^alpha is irrational: scaled Bernoulli family with m > 1 and non-integer alpha.
struct NonRationalScale : Error {
    using Error::Error;
};

// Identity restricted to odd m.
struct EvenModulus : Error {
    using Error::Error;
};

}  // namespace umbral
