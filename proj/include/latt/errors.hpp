#pragma once

#include <stdexcept>
#include <string>

namespace latt {

// Base type for every contract violation raised by the library.
struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input rows do not generate a full-rank lattice.
struct SingularBasis : LatticeError {
  using LatticeError::LatticeError;
};

// Vector / matrix sizes do not match, or a level index is out of range.
struct DimensionMismatch : LatticeError {
  using LatticeError::LatticeError;
};

// A solver required an HKZ-reduced basis and the check failed.
struct NotHkz : LatticeError {
  using LatticeError::LatticeError;
};

// A solver required a basis whose reverse dual is HKZ-reduced.
struct NotDualHkz : LatticeError {
  using LatticeError::LatticeError;
};

// The exhaustive search box exceeds the configured point budget.
struct BoxTooLarge : LatticeError {
  using LatticeError::LatticeError;
};

// No prime of the requested bit length was found within the attempt bound.
struct PrimeGenFailure : LatticeError {
  using LatticeError::LatticeError;
};

struct InvalidAlpha : LatticeError {
  using LatticeError::LatticeError;
};

// An enumeration exceeded its node budget before reaching a verdict.
struct EnumBudgetExceeded : LatticeError {
  using LatticeError::LatticeError;
};

// A cross-check between independent solvers failed; the message carries
// the path of the serialized repro bundle when one was written.
struct InvariantViolation : LatticeError {
  using LatticeError::LatticeError;
};

}  // namespace latt
