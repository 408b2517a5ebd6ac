#pragma once

#include <stdexcept>
#include <string>

namespace uflab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (exponent out of range,
/// degenerate width, malformed grid, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature ran out of its panel budget before meeting the
/// requested tolerance. Carries the best estimate reached.
class ToleranceNotAchieved : public Error {
public:
    ToleranceNotAchieved(const std::string& what, double best_estimate, double abs_error)
        : Error(what), best_estimate_(best_estimate), abs_error_(abs_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double abs_error() const noexcept { return abs_error_; }

private:
    double best_estimate_;
    double abs_error_;
};

}  // namespace uflab
