#pragma once

#include <stdexcept>
#include <string>

namespace sortkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands do not live in the same ambient ring, or a value is malformed.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the domain an operation is defined on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap or budget would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An identity that the theory guarantees failed on a concrete instance.
class Falsification : public Error {
 public:
  using Error::Error;
};

}  // namespace sortkit
