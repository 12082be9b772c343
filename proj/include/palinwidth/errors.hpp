#pragma once

#include <stdexcept>
#include <string>

namespace palinwidth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad word grammar, mismatched groups, invalid specs.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. a filler letter inside
/// an associated subgroup, or a non-palindrome handed to symmetrize).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is not defined for this presentation, e.g. the
/// segment quasi-homomorphism when CaC = Ca^-1C, or the index-two
/// decomposition when an index differs from 2.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Indicates a bug in an oracle or in the
/// rewriting code, never a user mistake.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace palinwidth
