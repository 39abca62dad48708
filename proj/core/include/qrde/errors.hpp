#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrde {

enum class ErrorCode {
  kInvalidArgument,
  kNotAnEquilibrium,
  kDegenerateDenominator,
  kWrongClass,
  kOutOfRegime,
  kOutOfPhase,
  kDegenerateBase,
};

std::string_view to_string(ErrorCode code);

// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qrde
