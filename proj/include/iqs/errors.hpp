#pragma once

#include <stdexcept>
#include <string>

namespace iqs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (r <= 0, s outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The physical parameters are valid but the requested solver does not support them.
class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// |b| <= |a|: the potential supports no TRA basis.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (negative radicand where a positive one is guaranteed).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A three-term recursion hit a zero denominator.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel exceeded its iteration cap.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Cholesky factorization of a matrix expected to be positive definite broke down.
class NotPositiveDefinite : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// No lambda window of stable eigenvalues was found.
class NoPlateau : public Error {
 public:
  using Error::Error;
};

}  // namespace iqs
