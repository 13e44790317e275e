#pragma once

#include <stdexcept>
#include <string>

namespace spellfix {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flag values or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input data: bad UTF-8, bad TSV rows, id mismatches.
class DataError : public Error {
 public:
  using Error::Error;
};

// File system failures. The message always names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spellfix
