#pragma once

#include <stdexcept>
#include <string>

namespace hslab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter triple outside the admissible open set.
struct DomainError : Error {
    using Error::Error;
};

// Self-convergent quadrature failed to settle within its round budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// Declared endpoint behavior makes the requested integral divergent.
struct SingularityError : Error {
    using Error::Error;
};

struct GridError : Error {
    using Error::Error;
};

struct EigenFailure : Error {
    using Error::Error;
};

// Requested experiment outside the parameter regime it is designed for.
struct RegimeError : Error {
    using Error::Error;
};

// Residual after projection too small to normalize into a direction.
struct DegenerateDecomposition : Error {
    using Error::Error;
};

}  // namespace hslab
