#include "bandit_lab/error.hpp"

namespace bandit_lab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::Periodic: return "Periodic";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::IrreducibilityViolated: return "IrreducibilityViolated";
    case ErrorCode::ComplexSpectrum: return "ComplexSpectrum";
    case ErrorCode::ProtocolViolation: return "ProtocolViolation";
    case ErrorCode::AmbiguousOptimum: return "AmbiguousOptimum";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& message,
                    std::optional<std::size_t> arm) {
  std::string out(to_string(code));
  if (arm) out += " (arm " + std::to_string(*arm + 1) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> arm)
    : std::runtime_error(compose(code, message, arm)),
      code_(code),
      arm_(arm),
      detail_(message) {}

Error Error::with_arm(std::size_t arm) const {
  return Error(code_, detail_, arm);
}

}  // namespace bandit_lab
