#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad constructor arguments (chain sizes, tables that are not residuated lattices).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Malformed external input: files, matrices with wrong dimensions.
class InputError : public Error {
 public:
  using Error::Error;
};

// Valid values combined in an invalid way (carrier or algebra mismatch).
class UsageError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation needs a relation the frame does not carry, or carries
// one that failed its compatibility check.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mvlogic
