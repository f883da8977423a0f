#pragma once

#include <stdexcept>
#include <string>

namespace gcst {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// A parameter range where a measure has negative mass / is not normalizable.
struct NotAProbabilityMeasure : DomainError {
    using DomainError::DomainError;
};

// An iterative method failed to reach its tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// A result is numerically unusable (overflow, catastrophic cancellation, ...).
struct NumericalError : Error {
    using Error::Error;
};

// A closed-form branch choice could not be made unambiguously.
struct BranchError : Error {
    using Error::Error;
};

// Requested combination is outside what this implementation supports.
struct UnsupportedError : Error {
    using Error::Error;
};

} // namespace gcst
