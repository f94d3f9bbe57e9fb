#pragma once

#include <stdexcept>
#include <string>

namespace afflat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (dimension mismatch,
/// non-regular simplex where a regular one is required, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside the class an operation handles: a trivial
/// angle, a collinear triangle, a conic that is not a rational ellipse.
class NotInClass : public Error {
 public:
  using Error::Error;
};

/// An enumeration-based search hit its configured denominator cap.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

/// A postcondition that the mathematics guarantees did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace afflat

#define AFFLAT_CHECK(cond, msg)                                   \
  do {                                                            \
    if (!(cond)) throw ::afflat::InternalError(std::string(msg)); \
  } while (false)
