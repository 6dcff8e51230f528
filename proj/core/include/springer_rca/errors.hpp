#pragma once

#include <stdexcept>
#include <string>

namespace springer_rca {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or lengths that do not line up (cocharacter length, matrix sizes, bases).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the supported family, e.g. gcd(n, k) != 1 or H with n != 2.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range or malformed arguments.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A vector or composition reaches outside the truncated degree range.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A suite needs a larger truncation degree than it was given.
class UnderTruncationError : public Error {
 public:
  UnderTruncationError(int required, int given)
      : Error("truncation degree " + std::to_string(given) + " is too small; need max degree >= " +
              std::to_string(required)),
        required_(required),
        given_(given) {}

  int required() const noexcept { return required_; }
  int given() const noexcept { return given_; }

 private:
  int required_;
  int given_;
};

/// The semigroup oracle exceeded its configured search budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal mathematical invariant failed (vanishing denominator, nonzero boundary numerator, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace springer_rca
