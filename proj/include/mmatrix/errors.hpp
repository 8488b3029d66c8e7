#pragma once

#include <stdexcept>
#include <string>

namespace mmatrix {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix order below the supported minimum (n < 2).
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// Generator precondition violated, e.g. composite n for type 1.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a closed-form formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Observed value cannot come from the expected closed form.
class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmatrix
