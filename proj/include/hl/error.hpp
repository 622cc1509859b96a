#ifndef HL_ERROR_HPP
#define HL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hl {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent arguments (gcd violations, bad ranges given).
struct ArgumentError : Error {
  using Error::Error;
};

/// Input lies outside the mathematical validity of an estimate or criterion.
struct DomainError : Error {
  using Error::Error;
};

/// Query exceeds the data actually held (table limit, class exhausted).
struct RangeError : Error {
  using Error::Error;
};

/// Request exceeds declared implementation limits (sieve maximum, scan caps,
/// divisor enumeration size).
struct CapacityError : Error {
  using Error::Error;
};

}  // namespace hl

#endif
