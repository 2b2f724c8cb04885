#pragma once

#include <stdexcept>
#include <string>

namespace cmbal {

/// Malformed or out-of-contract input (bad files, violated preconditions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object failed one of its machine-checked properties.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The chosen values for z1..z4 make a required matrix singular.
class DegenerateSpecialization : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace cmbal
