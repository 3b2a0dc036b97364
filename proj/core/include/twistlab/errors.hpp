#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown labels, bad shapes, schema violations.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (e.g. a cochain that is not a cocycle).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Something the library computed contradicts itself. Always a bug or an overflow.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistlab
