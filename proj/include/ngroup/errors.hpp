#pragma once

#include <stdexcept>
#include <string>

namespace ngroup {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on carriers (or groups) of different sizes.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Induced block map depends on the choice of representative.
class IllDefined : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check that a theorem guarantees has failed.
/// Seeing one means the implementation is wrong.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ngroup
