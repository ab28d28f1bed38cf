#pragma once

#include <stdexcept>
#include <string>

namespace reid {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed file contents: JSON schema violations, bad binary headers.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures: missing files, short reads, failed writes.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace reid
