#pragma once

#include <stdexcept>
#include <string>

namespace robinf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes (rows, columns, state counts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A computed result failed one of its own postconditions. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace robinf
