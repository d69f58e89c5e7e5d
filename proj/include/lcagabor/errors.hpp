#pragma once

#include <stdexcept>
#include <string>

namespace lcagabor {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different groups, or coordinates/dimensions do not line up.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A group, subgroup list or enumeration would exceed its configured cap.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (literals, grammars, precondition violations on values).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The Gabor system is not a frame where one is required.
class NotAFrame : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// An eigen-solver or linear solver reported failure.
class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

}  // namespace lcagabor
