#pragma once

#include <stdexcept>
#include <string>

namespace strongcp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// A set system does not have the intersection property a solver relies on.
struct PropertyViolation : Error {
  using Error::Error;
};

/// A brute-force routine was asked for more work than its guard allows.
struct SizeGuardExceeded : Error {
  using Error::Error;
};

}  // namespace strongcp
