#pragma once

#include <stdexcept>
#include <string>

namespace tmap {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (x outside [0,1], t outside (0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters violate a structural invariant (box parameters outside the admissible set, n < 5, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A checked precondition of an algorithm does not hold (e.g. slope floor for certification).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data: documents, certificates, complexes.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A post-hoc check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tmap
