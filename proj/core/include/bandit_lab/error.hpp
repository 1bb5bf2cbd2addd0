#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bandit_lab {

enum class ErrorCode {
  NotStochastic,
  Reducible,
  Periodic,
  SingularSystem,
  IrreducibilityViolated,
  ComplexSpectrum,
  ProtocolViolation,
  AmbiguousOptimum,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; `code()` distinguishes the failure
// and `arm()` carries the offending arm when the error is arm-specific.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> arm = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> arm() const noexcept { return arm_; }

  // Returns a copy tagged with the arm index, message prefixed accordingly.
  Error with_arm(std::size_t arm) const;

 private:
  ErrorCode code_;
  std::optional<std::size_t> arm_;
  std::string detail_;
};

}  // namespace bandit_lab
