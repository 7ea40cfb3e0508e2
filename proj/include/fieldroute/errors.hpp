#pragma once

#include <stdexcept>
#include <string>

namespace fieldroute {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition (bad k, bad permutation,
/// out-of-range probability, matrix index out of bounds, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

/// An input file is syntactically or semantically malformed. Messages carry
/// the offending row or key.
struct ParseError : Error {
  using Error::Error;
};

/// A requested computation needs data that was not provided (e.g. matrix
/// durations without a duration matrix).
struct MissingData : Error {
  using Error::Error;
};

/// Filesystem failure: unreadable input or unwritable output.
struct IoError : Error {
  using Error::Error;
};

}  // namespace fieldroute
