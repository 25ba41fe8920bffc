#include "padyn/error.hpp"

namespace padyn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NoRootInRegion: return "NoRootInRegion";
    case ErrorCode::DomainNotInvariant: return "DomainNotInvariant";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace padyn
