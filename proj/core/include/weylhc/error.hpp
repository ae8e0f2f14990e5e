#pragma once

#include <stdexcept>
#include <string>

namespace weylhc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Cartan type string or rank outside the family's bounds.
class InvalidType : public Error {
 public:
  using Error::Error;
};

// Group order (or class count) above the configured enumeration bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotImplemented : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace weylhc
