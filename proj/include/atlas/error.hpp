#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class ErrorCode {
  OutOfRange,
  NotPrime,
  UnsupportedPrime,
  NotInSigma,
  FlavorMismatch,
  ZeroParameter,
  DegenerateParameter,
  InvalidExponents,
  DegeneratePoints,
  NegativeDimension,
  BoundExceeded,
  VerificationFailure,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace atlas
