#include "core/error.hpp"

namespace overrank {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroLeadingTerm: return "ZeroLeadingTerm";
    case ErrorCode::BeyondTruncation: return "BeyondTruncation";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::NotPowerSeries: return "NotPowerSeries";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
  }
  return "Unknown";
}

}  // namespace overrank
