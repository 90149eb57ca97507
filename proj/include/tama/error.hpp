#pragma once

#include <stdexcept>
#include <string>

namespace tama {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal identity that must hold by construction fails.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// A precondition on algebra elements failed; `witness` is the offending term.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace tama
