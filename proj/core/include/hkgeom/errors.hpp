#pragma once

#include <stdexcept>
#include <string>

namespace hkgeom {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments of an operation was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Scalars from incompatible fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// A formula was requested outside the hypotheses under which it holds.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured size bound.
class GuardrailExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hkgeom
