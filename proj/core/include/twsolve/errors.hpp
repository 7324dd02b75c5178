#pragma once

#include <stdexcept>
#include <string>

namespace tws {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a certified comparison cannot be decided even at the
// precision cap of the ladder (see enclosure.hpp).
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// The polynomial handed to dominant_root() has no real root greater than 1.
class NotBracketed : public Error {
 public:
  using Error::Error;
};

// log_height() only knows the catalogued algebraic numbers.
class UnsupportedNumber : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// The shift mu of a Baker-Davenport instance is identically zero; the
// homogeneous (Legendre) route must be taken instead.
class MuDegenerate : public Error {
 public:
  using Error::Error;
};

// nearest_integer_distance() could not commit to one nearest integer.
class AmbiguousMidpoint : public Error {
 public:
  using Error::Error;
};

// Interval division where the divisor encloses zero.
class ZeroInDivisor : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tws
