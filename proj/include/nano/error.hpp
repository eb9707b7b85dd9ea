#pragma once

#include <stdexcept>
#include <string>

namespace nano {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is well-formed but violates a structural rule (duplicate label,
/// overlapping blocks, unknown element, non-total map, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two subsets (or a subset and a space) bound to different universes.
class UniverseMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A powerset-sized computation was requested on a universe above the cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nano
