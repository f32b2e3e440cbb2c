#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankcorr {

enum class ErrorCode {
  LengthMismatch,
  TooSmall,
  NonFinite,
  BadBandwidth,
  UnsupportedKernel,
  DuplicateValues,
  DegenerateScale,
  ZeroVariance,
  TiesPresent,
  BadAlpha,
  MissingCell,
  InvalidConfig,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::BadBandwidth: return "BadBandwidth";
    case ErrorCode::UnsupportedKernel: return "UnsupportedKernel";
    case ErrorCode::DuplicateValues: return "DuplicateValues";
    case ErrorCode::DegenerateScale: return "DegenerateScale";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::TiesPresent: return "TiesPresent";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::MissingCell: return "MissingCell";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rankcorr
