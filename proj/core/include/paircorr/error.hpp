#pragma once

#include <stdexcept>
#include <string>

namespace paircorr {

// Base for every error raised by the library. Callers that only care about
// "something numerical went wrong" catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a mathematical operation (e.g. q == 0).
class DomainError : public Error {
public:
  using Error::Error;
};

// Operation deliberately not provided for this input (e.g. 3D spinors).
class UnsupportedOperation : public Error {
public:
  using Error::Error;
};

// Caller broke a documented precondition.
class ContractViolation : public Error {
public:
  using Error::Error;
};

// Inconsistent grid / lattice / field parameters, detected before computing.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

// Quadrature did not reach its tolerance.
class QuadratureFailure : public Error {
public:
  QuadratureFailure(const std::string &what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

private:
  double achieved_error_;
};

// No crossing of the requested level inside the sampled range.
class WidthNotBracketed : public Error {
public:
  WidthNotBracketed(const std::string &what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}
  double grid_lo() const noexcept { return lo_; }
  double grid_hi() const noexcept { return hi_; }

private:
  double lo_, hi_;
};

// Request to evaluate a density at a point where it diverges.
class SingularPoint : public Error {
public:
  using Error::Error;
};

} // namespace paircorr
