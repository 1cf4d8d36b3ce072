#include "polity/error.hpp"

namespace polity {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::RowSumViolation: return "RowSumViolation";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::BadIndexSet: return "BadIndexSet";
    case ErrorCode::NotSubstochastic: return "NotSubstochastic";
    case ErrorCode::BadDistribution: return "BadDistribution";
    case ErrorCode::CyclicSpec: return "CyclicSpec";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::EpsTooLarge: return "EpsTooLarge";
    case ErrorCode::ThresholdTooLarge: return "ThresholdTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotUpperClass: return "NotUpperClass";
    case ErrorCode::InvalidAtEps: return "InvalidAtEps";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::SingularBlock: return "SingularBlock";
    case ErrorCode::SingularVoterBlock: return "SingularVoterBlock";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::AmbiguousMixing: return "AmbiguousMixing";
    case ErrorCode::FullRank: return "FullRank";
    case ErrorCode::OmegaSingular: return "OmegaSingular";
    case ErrorCode::WalkLimitExceeded: return "WalkLimitExceeded";
    case ErrorCode::ResampleLimit: return "ResampleLimit";
    case ErrorCode::NumericFailure: return "NumericFailure";
  }
  return "UnknownError";
}

ErrorKind kind_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularBlock:
    case ErrorCode::SingularVoterBlock:
    case ErrorCode::NoConvergence:
    case ErrorCode::AmbiguousMixing:
    case ErrorCode::FullRank:
    case ErrorCode::OmegaSingular:
    case ErrorCode::WalkLimitExceeded:
    case ErrorCode::ResampleLimit:
    case ErrorCode::NumericFailure:
      return ErrorKind::Numeric;
    default:
      return ErrorKind::Validation;
  }
}

}  // namespace polity
