#pragma once

#include <stdexcept>

namespace thp {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: field descriptions, scalar literals, JSON files.
struct ParseError : Error {
  using Error::Error;
};

/// A mathematically invalid request: dividing by zero, mixing scalars from
/// different fields, inverting a singular matrix, seeding a basis outside the
/// required eigenspace, and similar precondition violations.
struct DomainError : Error {
  using Error::Error;
};

/// An internal cross-check failed.  Either an input object does not satisfy
/// the structural assumptions it claims to, or there is a bug; the message
/// names the identity that broke.
struct StructuralError : Error {
  using Error::Error;
};

/// The request is well-posed but outside the sizes this implementation is
/// willing to handle exhaustively (e.g. root search over a huge prime field).
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace thp
