#pragma once

#include <stdexcept>
#include <string>

namespace qgb {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed user input: files, expressions, schemas. CLI maps this to exit code 2.
struct input_error : error {
  using error::error;
};

/// A step cap was exhausted during rewriting that is not guaranteed to terminate.
struct limit_error : error {
  using error::error;
};

}  // namespace qgb
