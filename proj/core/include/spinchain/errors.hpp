#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (weights, index sets, twists).
struct InputError : Error {
  using Error::Error;
};

/// Evaluation hit a pole of a rational function.
struct PoleError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

/// An internal consistency check failed beyond tolerance.
struct VerificationError : Error {
  using Error::Error;
};

}  // namespace spinchain
