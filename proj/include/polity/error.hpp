#ifndef POLITY_ERROR_HPP
#define POLITY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace polity {

enum class ErrorCode {
  // validation
  NonSquare,
  NonFiniteEntry,
  NegativeEntry,
  NonPositiveEntry,
  RowSumViolation,
  NonPositiveWeight,
  BadIndexSet,
  NotSubstochastic,
  BadDistribution,
  CyclicSpec,
  BadParameters,
  EpsTooLarge,
  ThresholdTooLarge,
  TooLarge,
  NotUpperClass,
  InvalidAtEps,
  ParseError,
  IoError,
  UsageError,
  // numeric
  SingularBlock,
  SingularVoterBlock,
  NoConvergence,
  AmbiguousMixing,
  FullRank,
  OmegaSingular,
  WalkLimitExceeded,
  ResampleLimit,
  NumericFailure,
};

// Validation errors map to exit code 1, numeric failures to exit code 2.
enum class ErrorKind { Validation, Numeric };

const char* to_string(ErrorCode code);
ErrorKind kind_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  // `indices` carries offending 1-based person/row indices (e.g. the family
  // behind a singular voter block).
  Error(ErrorCode code, const std::string& message, std::vector<int> indices)
      : Error(code, message) {
    indices_ = std::move(indices);
  }

  ErrorCode code() const { return code_; }
  ErrorKind kind() const { return kind_of(code_); }
  const std::vector<int>& indices() const { return indices_; }

 private:
  ErrorCode code_;
  std::vector<int> indices_;
};

}  // namespace polity

#endif
