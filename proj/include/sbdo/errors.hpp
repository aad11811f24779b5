#pragma once

#include <stdexcept>
#include <string>

namespace sbdo {

// Base of every error raised by the library. The C API maps the concrete
// subclasses onto its error codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero or non-invertible element") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Bad arguments: unknown indeterminate, out-of-range k, wrong grade, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("multivectors have different signatures") {}
  explicit SignatureMismatch(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotInDenseCell : public Error {
 public:
  NotInDenseCell() : Error("element is not in the Gelfand-Naimark dense cell") {}
  explicit NotInDenseCell(const std::string& what) : Error(what) {}
};

class FieldExtensionRequired : public Error {
 public:
  explicit FieldExtensionRequired(const std::string& what) : Error(what) {}
};

class ActionUndefined : public Error {
 public:
  ActionUndefined() : Error("conformal action undefined at this point (maps to infinity)") {}
  explicit ActionUndefined(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal invariant the construction relies on fails, e.g. a
// diagonal restriction that should be constant is not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sbdo
