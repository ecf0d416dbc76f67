#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fansub {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation outside a pressure law's evaluable range (rho <= 0, outside a
/// tabulated sample hull, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
public:
  using Error::Error;
};

/// A derived interior density came out non-positive.
class DensityError : public Error {
public:
  using Error::Error;
};

/// A halving search ran out of its halving budget.
class SelectionError : public Error {
public:
  using Error::Error;
};

/// Malformed candidate (wrong speed count, missing region, bad JSON field).
class StructuralError : public Error {
public:
  using Error::Error;
};

/// Invalid run configuration; carries the aggregated list of violations.
class ConfigError : public Error {
public:
  ConfigError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations_(std::move(violations)) {}
  explicit ConfigError(const std::string& what) : Error(what) {}
  const std::vector<std::string>& violations() const { return violations_; }

private:
  std::vector<std::string> violations_;
};

/// File I/O failure; message includes the offending path.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace fansub
