#pragma once

#include <stdexcept>

namespace bb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation
// (non-unit vector, non-bivector rotor plane, zero-length axis, ...).
struct DomainError : Error {
    using Error::Error;
};

// Two vectors that must span a plane are numerically parallel.
struct ParallelVectorsError : DomainError {
    using DomainError::DomainError;
};

// Even elements of different representation flavors were combined.
struct MixedRepresentationError : Error {
    using Error::Error;
};

// Malformed request: bad counts, unknown identifiers, invalid configuration.
struct UsageError : Error {
    using Error::Error;
};

} // namespace bb
