#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// An exact integral is infinite for the requested parameters.
struct DivergentError : Error {
  using Error::Error;
};

/// Exponent parameters violate the ordering required by a theorem.
struct InvalidExponents : DomainError {
  using DomainError::DomainError;
};

/// Adaptive quadrature ran out of subdivisions before reaching tolerance.
struct ToleranceNotMet : Error {
  ToleranceNotMet(const std::string& msg, double achieved)
      : Error(msg), achieved_error(achieved) {}
  double achieved_error;
};

/// Bisection bracket does not straddle a root.
struct NoSignChange : Error {
  using Error::Error;
};

/// A numerically probed hypothesis of an identity failed.
struct HypothesisViolated : Error {
  using Error::Error;
};

/// Weight is not non-decreasing where monotonicity is required.
struct NotMonotone : DomainError {
  using DomainError::DomainError;
};

/// Exponent outside the self-improvement range (p0, q].
struct OutOfRange : DomainError {
  using DomainError::DomainError;
};

/// Malformed input file or spec string.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace hardy
