#pragma once

#include <stdexcept>
#include <string>

namespace ctda {

// Error taxonomy mirrored by the CLI exit codes:
//   ValidationError -> 2, NumericError -> 3, DependencyError -> 4.

/// Bad input data or parameters: parse failures, contract violations.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: divergence, non-finite values, convergence loss.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A required upstream artifact or resource is missing.
class DependencyError : public std::runtime_error {
public:
    explicit DependencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ctda
