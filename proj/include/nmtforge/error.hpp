#pragma once

#include <stdexcept>
#include <string>

namespace nmtforge {

/// Base error for everything raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user input: missing files, malformed config, out-of-range ids.
/// The CLI maps these to exit code 1, everything else to 2.
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace nmtforge
