#pragma once

#include <stdexcept>
#include <string>

namespace eisenlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (bad prime, wrong divisibility...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No good prime was found below the search bound.
class NoGoodPrime : public Error {
 public:
  using Error::Error;
};

/// A valuation that must be finite reached the working precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Cochains handed in as a defining system violate the defining-system law.
class InvalidDefiningSystem : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a persisted record file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace eisenlab
