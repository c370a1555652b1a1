#pragma once

#include <stdexcept>
#include <string>

namespace swkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied malformed or out-of-contract input.
class InputError : public Error {
  public:
    using Error::Error;
};

/// An enumeration guard would be exceeded; scale guards with SWKIT_GUARD_SCALE.
class GuardExceeded : public Error {
  public:
    explicit GuardExceeded(const std::string& what) : Error("guard exceeded: " + what) {}
};

class DegreeExceedsLength : public InputError {
  public:
    using InputError::InputError;
};

class IndexOutOfRange : public InputError {
  public:
    using InputError::InputError;
};

class RingMismatch : public InputError {
  public:
    using InputError::InputError;
};

class UnsupportedRamified : public InputError {
  public:
    using InputError::InputError;
};

class NotASubmodule : public InputError {
  public:
    using InputError::InputError;
};

class BadBlockSizes : public InputError {
  public:
    using InputError::InputError;
};

class NotSemisimple : public InputError {
  public:
    using InputError::InputError;
};

/// Internal consistency failure: a cardinality ratio was not a power of the residue field size.
class NonIntegralLog : public Error {
  public:
    using Error::Error;
};

class NotStabilized : public Error {
  public:
    using Error::Error;
};

/// The hyperoctahedral sheaf-matching identity was not verified for the required rank.
class IdentityNotVerified : public Error {
  public:
    using Error::Error;
};

}  // namespace swkit
