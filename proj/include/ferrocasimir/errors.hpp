#pragma once

#include <stdexcept>
#include <string>

namespace ferrocasimir {

/// Invalid configuration, database, or lookup input (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: non-convergent quadrature, truncated Matsubara sum
/// with a non-negligible tail, or evaluation outside a model's numeric
/// domain (CLI exit code 3).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ferrocasimir
