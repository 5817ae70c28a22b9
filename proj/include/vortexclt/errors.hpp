#pragma once

#include <stdexcept>
#include <string>

namespace vortexclt {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operation does not support the requested geometry.
class UnsupportedDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coincident points fed to a singular kernel.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the window where the Gibbs measure is known to exist.
class ValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Too little data for a statistic to be meaningful.
class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vortexclt
