#pragma once

#include <stdexcept>
#include <string>

namespace ccseq {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedLength : Error {
    using Error::Error;
};

struct UnsupportedVariant : Error {
    using Error::Error;
};

struct NotPowerOfTwo : Error {
    using Error::Error;
};

struct LengthCapExceeded : Error {
    using Error::Error;
};

struct EmptyFactorList : Error {
    using Error::Error;
};

/// Thrown when a length multiplier has a prime factor larger than 13.
struct NotFeasible : Error {
    long long offending_prime;
    NotFeasible(long long prime, const std::string& msg)
        : Error(msg), offending_prime(prime) {}
};

struct ExhaustiveSearchTooLarge : Error {
    using Error::Error;
};

struct MateCountMismatch : Error {
    using Error::Error;
};

struct ZeroMainlobe : Error {
    using Error::Error;
};

/// Transform-path correlation produced a residue too large to round safely.
struct NumericalResidueTooLarge : Error {
    using Error::Error;
};

/// Malformed sequence file or document.
struct ParseError : Error {
    using Error::Error;
};

} // namespace ccseq
