#pragma once

#include <stdexcept>
#include <string>

namespace geomaug {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument (shape, channel count, parameter range) was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// File could not be read, written or decoded.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Pipeline configuration or log schema is malformed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace geomaug
