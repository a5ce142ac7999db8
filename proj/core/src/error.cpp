#include "smw/error.hpp"

namespace smw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parameter_error:
      return "parameter_error";
    case ErrorCode::not_admissible:
      return "not_admissible";
    case ErrorCode::not_sms:
      return "not_sms";
    case ErrorCode::tilt_rule_incomplete:
      return "tilt_rule_incomplete";
    case ErrorCode::unsupported_weight:
      return "unsupported_weight";
  }
  return "parameter_error";
}

}  // namespace smw
