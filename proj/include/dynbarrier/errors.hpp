#ifndef DYNBARRIER_ERRORS_HPP
#define DYNBARRIER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynbarrier {

/// Invalid configuration or precondition violation (maps to CLI exit code 1).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure during an otherwise valid computation (CLI exit code 2).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wave packet reached the grid boundary; the grid was sized too small.
class GeometryError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Norm drift exceeded the stability limit during propagation.
class StabilityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace dynbarrier

#endif
