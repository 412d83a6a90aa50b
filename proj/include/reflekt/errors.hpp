#pragma once

#include <stdexcept>
#include <string>

namespace reflekt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input data that parses but is mathematically inconsistent.
class DataError : public Error {
 public:
  using Error::Error;
};

class NotReflectionError : public DataError {
 public:
  using DataError::DataError;
};

class ConductorMismatchError : public DataError {
 public:
  using DataError::DataError;
};

/// Group closure produced a different number of elements than declared.
class EnumerationError : public DataError {
 public:
  using DataError::DataError;
};

/// An exhaustive search would exceed its configured budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace reflekt
