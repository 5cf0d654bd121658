#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

// Bad caller input: malformed notation, mismatched r, out-of-range indices.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is outside the supported surfaces (r too large for the operation).
class UnsupportedError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// An operation's documented precondition does not hold for the given class.
class PreconditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Oracle configuration is unusable (composite modulus, modulus too small, ...).
class ConfigError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// An internal consistency check failed. Always a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define FATPOINTS_CHECK(cond, msg)                                     \
  do {                                                                 \
    if (!(cond)) throw ::fatpoints::InvariantError(std::string(msg)); \
  } while (0)

}  // namespace fatpoints
