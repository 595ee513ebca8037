#pragma once

#include <stdexcept>
#include <string>

namespace bitwist {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition on an argument failed (bad multiplier, n < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Even numerator: the numerator closure is a two-component link.
class NotAKnot : public Error {
 public:
  using Error::Error;
};

/// No all-even continued fraction exists for the given parity class.
class NotExpandable : public Error {
 public:
  using Error::Error;
};

/// A presentation handed to elimination was not built from the stated multipliers.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Denominator closure numerator is zero; the axis is the unknot.
class DivisionUndefined : public Error {
 public:
  using Error::Error;
};

/// The surgery engine tried to act on a curve that is not in the diagram.
class MalformedState : public Error {
 public:
  using Error::Error;
};

}  // namespace bitwist
