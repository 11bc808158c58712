#include "hapecon/error.hpp"

namespace hapecon {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::validation: return "VALIDATION";
    case ErrorCode::unknown_reference: return "UNKNOWN_REFERENCE";
    case ErrorCode::missing_parameter: return "MISSING_PARAMETER";
    case ErrorCode::out_of_range: return "OUT_OF_RANGE";
    case ErrorCode::division_by_zero: return "DIVISION_BY_ZERO";
    case ErrorCode::capacity_exceeded: return "CAPACITY_EXCEEDED";
    case ErrorCode::no_sign_change: return "NO_SIGN_CHANGE";
    case ErrorCode::no_root_in_range: return "NO_ROOT_IN_RANGE";
    case ErrorCode::io: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace hapecon
