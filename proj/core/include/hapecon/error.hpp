#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hapecon {

enum class ErrorCode {
  validation,
  unknown_reference,
  missing_parameter,
  out_of_range,
  division_by_zero,
  capacity_exceeded,
  no_sign_change,
  no_root_in_range,
  io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the engine carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace hapecon
