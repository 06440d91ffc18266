#include "sdt/error.hpp"

namespace sdt {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace sdt
