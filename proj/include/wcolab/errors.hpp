#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcolab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A composition argument left the open unit disk, or a point outside the
/// disk was requested.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A real power met a value on the negative real axis (principal branch cut).
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside their admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a space whose norm has the |f(0)| + p(f) form.
class UnsupportedSpace : public Error {
 public:
  using Error::Error;
};

/// A zero-norm function was handed to a ratio measurement.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The contour of a zero count passes (numerically) through a zero.
class ContourZero : public Error {
 public:
  using Error::Error;
};

class NonVanishingViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wcolab
