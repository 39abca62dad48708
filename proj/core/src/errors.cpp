#include "qrde/errors.hpp"

namespace qrde {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kWrongClass: return "WrongClass";
    case ErrorCode::kOutOfRegime: return "OutOfRegime";
    case ErrorCode::kOutOfPhase: return "OutOfPhase";
    case ErrorCode::kDegenerateBase: return "DegenerateBase";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace qrde
