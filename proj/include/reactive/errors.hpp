#pragma once

#include <stdexcept>
#include <string>

namespace reactive {

/// Bad parameter handed to a constructor or operation (maps to CLI exit 2).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures that happen while computing (maps to CLI exit 1).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A field was evaluated at a point where it diverges (e.g. the dipole origin).
class SingularityError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// A quantity that must be nonnegative came out clearly negative.
class ConsistencyError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Requested work exceeds the configured sample budget.
class ResourceError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// A sampled magnitude is too small to take a logarithm of safely.
class UnderflowError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace reactive
