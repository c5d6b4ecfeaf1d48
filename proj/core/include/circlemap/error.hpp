#pragma once

#include <stdexcept>
#include <string>

namespace circlemap {

enum class ErrorCode {
  invalid_grid,
  dimension_mismatch,
  grid_mismatch,
  degenerate_node,
  constraint_violation,
  unsupported_exponent,
  invalid_argument,
  domain_error,
  io_error,
  parse_error,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` identifies the contract that
/// was violated; `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circlemap
