#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdt {

enum class ErrorCode {
  InvalidTable,
  SizeLimitExceeded,
  GroupMismatch,
  NotASubgroup,
  EmptySet,
  KOutOfRange,
  EpsilonOutOfRange,
  NotAbelian,
  HypothesisFailed,
  ParseError,
  UsageError,
};

/// Stable machine-readable name, e.g. "SizeLimitExceeded".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sdt
