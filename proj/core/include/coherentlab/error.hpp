#pragma once

#include <stdexcept>
#include <string>

namespace coherentlab {

// Invalid input or configuration. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Truncation leak above bound, eigensolver failure, non-finite results.
// Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A product left the enumerated lattice ball.
class BallUnderflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Enumeration exceeded its element cap.
class BudgetExceeded : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace coherentlab
