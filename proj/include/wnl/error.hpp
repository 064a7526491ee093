#ifndef WNL_ERROR_HPP
#define WNL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wnl {

enum class ErrorCode {
  ZeroVector,
  NoConvergence,
  NotUniformlyConvex,
  OutOfDomain,
  DimensionMismatch,
  OutOfRange,
  NonPositiveMax,
  MethodMismatch,
  InequalityViolated,
  VerificationFailed,
  NotUnitFunctional,
  ZeroPolynomial,
  HypothesisViolated,
  GuaranteeFailed,
  MonitorViolation,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotUniformlyConvex: return "NotUniformlyConvex";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonPositiveMax: return "NonPositiveMax";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::InequalityViolated: return "InequalityViolated";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotUnitFunctional: return "NotUnitFunctional";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::GuaranteeFailed: return "GuaranteeFailed";
    case ErrorCode::MonitorViolation: return "MonitorViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Domain errors are the caller's fault (bad parameters); everything else is
/// a numerical or verification outcome.
inline bool is_domain_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector:
    case ErrorCode::NotUniformlyConvex:
    case ErrorCode::OutOfDomain:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::OutOfRange:
    case ErrorCode::NotUnitFunctional:
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace wnl

#endif  // WNL_ERROR_HPP
