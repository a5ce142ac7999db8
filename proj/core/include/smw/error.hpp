#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smw {

/// Closed set of failure categories surfaced by the engine and the workbench.
enum class ErrorCode {
  parameter_error,
  not_admissible,
  not_sms,
  tilt_rule_incomplete,
  unsupported_weight,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace smw
