#pragma once

#include <stdexcept>

namespace levi_slope {

/// Raised when an operation is called with arguments that break its contract
/// (dimension mismatch, index out of range, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// User-supplied data that fails validation (bad root datum, bad spec string).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency assertion failed (e.g. two independent routes
/// disagree). Always a bug or corrupted input, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace levi_slope
