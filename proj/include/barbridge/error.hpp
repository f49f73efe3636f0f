#pragma once

#include <stdexcept>
#include <string>

namespace barbridge {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: shapes, asymmetric matrices, chains that
// are not cycles, grades outside the scale.
class InputError : public Error {
 public:
  using Error::Error;
};

// A standing assumption of the methods does not hold for this input
// (duplicate birth/death pairs, duplicate deaths in GF(2) mode, ...).
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

// The class handed to an extension routine is zero in homology.
class TrivialClassError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace barbridge
