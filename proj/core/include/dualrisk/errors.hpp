#ifndef DUALRISK_ERRORS_HPP
#define DUALRISK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dualrisk {

/// Failure categories surfaced by the library. The enumerator name is the
/// stable, user-facing error identifier (the CLI prints it verbatim).
enum class ErrorCode {
  NonPositiveProbability,
  MassNotOne,
  EmptyLottery,
  NotZeroMean,
  MassExceedsOne,
  ParamOutOfRange,
  InsufficientBranchMass,
  OrderingViolated,
  BadOrder,
  ZeroMeanGini,
  DomainViolation,
  RangeViolation,
  NoBracket,
  InconsistentLambda,
  BadQuadruple,
  NotAtZeroParticipation,
  NonConcaveUtility,
  BadSampleCount,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveProbability: return "NonPositiveProbability";
    case ErrorCode::MassNotOne: return "MassNotOne";
    case ErrorCode::EmptyLottery: return "EmptyLottery";
    case ErrorCode::NotZeroMean: return "NotZeroMean";
    case ErrorCode::MassExceedsOne: return "MassExceedsOne";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::InsufficientBranchMass: return "InsufficientBranchMass";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::ZeroMeanGini: return "ZeroMeanGini";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::InconsistentLambda: return "InconsistentLambda";
    case ErrorCode::BadQuadruple: return "BadQuadruple";
    case ErrorCode::NotAtZeroParticipation: return "NotAtZeroParticipation";
    case ErrorCode::NonConcaveUtility: return "NonConcaveUtility";
    case ErrorCode::BadSampleCount: return "BadSampleCount";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace dualrisk

#endif  // DUALRISK_ERRORS_HPP
