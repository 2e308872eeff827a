#pragma once

#include <stdexcept>
#include <string>

namespace logpole {

/// Invalid configuration or usage (bad parameters, exceeded limits).
/// The CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to converge; carries diagnostics.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logpole
