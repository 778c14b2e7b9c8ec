#pragma once

#include <stdexcept>
#include <string>

namespace rankasym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (Im(tau) <= 0, empty partition where a statistic is undefined, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A table or enumeration request exceeds its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A power series whose constant term is not a unit.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An Appell-Lerch or theta argument sits (numerically) on the lattice Z + Z tau.
class SingularArgument : public Error {
 public:
  SingularArgument(const std::string& what, long offending_index)
      : Error(what), offending_index_(offending_index) {}
  long offending_index() const noexcept { return offending_index_; }

 private:
  long offending_index_;
};

/// Adaptive quadrature ran out of refinement budget.
class QuadratureFailure : public Error {
 public:
  QuadratureFailure(const std::string& what, double achieved_error, double requested_error)
      : Error(what), achieved_error_(achieved_error), requested_error_(requested_error) {}
  double achieved_error() const noexcept { return achieved_error_; }
  double requested_error() const noexcept { return requested_error_; }

 private:
  double achieved_error_;
  double requested_error_;
};

/// The working precision cannot represent or resolve the requested quantity.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

}  // namespace rankasym
