#pragma once

#include <stdexcept>
#include <string>

namespace daylens {

// Raised for bad input data: malformed files, broken invariants, missing
// configuration. The CLI maps it to exit code 2; anything else is an
// internal error (exit 1).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace daylens
