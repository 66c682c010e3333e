#pragma once

#include <stdexcept>
#include <string>

namespace rothyp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ambient dimension below 3.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// Profile parameter outside its open interval, or a profile invariant broken.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Chart point where some cos(theta_i), i >= 2, vanishes.
class DegenerateChart : public Error {
 public:
  using Error::Error;
};

/// f'^2 + phi'^2 = 0, or f = 0 where a curvature needs 1/f.
class SingularProfile : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// A turning-angle closed form was requested for a profile that is not unit speed.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// A closed form with a negative power of sin R evaluated where sin R = 0.
class SingularFormula : public Error {
 public:
  using Error::Error;
};

class UnderdeterminedFit : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Finite-difference step too small to resolve the requested derivative.
class StepUnderflow : public Error {
 public:
  using Error::Error;
};

/// Residual and curvature diagnostics disagree; no classification branch applies.
class Unclassifiable : public Error {
 public:
  using Error::Error;
};

/// Malformed profile specification document. `field()` names the offending key.
class SpecParseError : public Error {
 public:
  SpecParseError(std::string field, const std::string& what)
      : Error("spec field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace rothyp
