#pragma once

#include <stdexcept>
#include <string>

namespace heraldsim {

/// Adaptive integration or eigensolver did not reach the requested accuracy.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

/// Request exceeds a hard size guard (e.g. dense four-index tensors).
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation is not defined for the given configuration
/// (e.g. pointwise evaluation of an idealized delta response).
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two redundant computation paths that must agree disagreed.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace heraldsim
