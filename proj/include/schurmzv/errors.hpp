#pragma once

#include <stdexcept>
#include <string>

namespace schurmzv {

/// Malformed textual input (tableau files, index lists, config files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (e.g. the SSYT enumeration cap) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. a quantity that must be real
/// came out with a nonzero imaginary part).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schurmzv
