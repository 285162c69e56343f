#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::NotInSigma: return "NotInSigma";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::DegenerateParameter: return "DegenerateParameter";
    case ErrorCode::InvalidExponents: return "InvalidExponents";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::NegativeDimension: return "NegativeDimension";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace atlas
