#pragma once

#include <stdexcept>
#include <string>

namespace scenforge {

enum class ErrorCode {
  // document / catalog parsing
  MalformedDocument,
  UnsupportedFeature,
  DanglingReference,
  CatalogParseError,
  InvariantViolation,
  // map queries
  NoCandidate,
  OutOfRange,
  UnknownLane,
  UnknownAttribute,
  // report extraction
  BackendError,
  IncompleteReport,
  UnknownAction,
  AmbiguousPosition,
  // placement / generation
  InfeasibleAssignment,
  FragmentInvalid,
  // mutation / assembly
  DomainExhausted,
  OperatorKindMismatch,
  InvalidOrder,
  SlotConflict,
  // trace analysis
  TooFewSamples,
  NonMonotonicTime,
  MissingGoal,
  DegenerateDistribution,
  // io
  IoError,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Process exit code family for a given error; documented in the README.
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace scenforge
