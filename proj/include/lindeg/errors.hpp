#pragma once

#include <stdexcept>
#include <string>

namespace lindeg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input: bad dimension vectors, shape or field mismatches.
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

/// An enumeration would exceed its hard size limit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "guard"; }
};

/// A rank table whose inversion produces a negative multiplicity.
class NotRealizable : public ValidationError {
 public:
  using ValidationError::ValidationError;
  const char* kind() const noexcept override { return "not_realizable"; }
};

class NotFlat : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not_flat"; }
};

class NotIrreducible : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "not_irreducible"; }
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

}  // namespace lindeg
