#pragma once

#include <stdexcept>
#include <string>

namespace isospec {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of the operation (p ∉ [0,1], bad index, even d, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The iterative eigensolver hit its sweep cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

enum class StateViolation { Shape, NonHermitian, Trace, NegativeEigenvalue };

const char* to_string(StateViolation v);

/// A matrix failed one of the density-matrix invariants.
class InvalidStateError : public Error {
 public:
  InvalidStateError(StateViolation violation, const std::string& detail)
      : Error(std::string(to_string(violation)) + ": " + detail), violation_(violation) {}

  StateViolation violation() const noexcept { return violation_; }

 private:
  StateViolation violation_;
};

}  // namespace isospec
