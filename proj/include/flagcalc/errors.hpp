#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported family/rank combination or malformed configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller mixed incompatible objects (root systems, blocks) or passed a bad word.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or sweep would exceed its configured bound.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t required)
      : Error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

/// Exact division by a linear form failed.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// No sign/placement convention reproduces the characterization properties.
class ConventionError : public Error {
 public:
  using Error::Error;
};

}  // namespace flagcalc
