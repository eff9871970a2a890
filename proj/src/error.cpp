#include "scenforge/error.hpp"

namespace scenforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::UnsupportedFeature: return "UnsupportedFeature";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::CatalogParseError: return "CatalogParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownLane: return "UnknownLane";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::BackendError: return "BackendError";
    case ErrorCode::IncompleteReport: return "IncompleteReport";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::AmbiguousPosition: return "AmbiguousPosition";
    case ErrorCode::InfeasibleAssignment: return "InfeasibleAssignment";
    case ErrorCode::FragmentInvalid: return "FragmentInvalid";
    case ErrorCode::DomainExhausted: return "DomainExhausted";
    case ErrorCode::OperatorKindMismatch: return "OperatorKindMismatch";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::SlotConflict: return "SlotConflict";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::MissingGoal: return "MissingGoal";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

int error_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
      return 3;
    case ErrorCode::MalformedDocument:
    case ErrorCode::UnsupportedFeature:
    case ErrorCode::DanglingReference:
    case ErrorCode::CatalogParseError:
    case ErrorCode::InvariantViolation:
      return 4;
    case ErrorCode::NoCandidate:
    case ErrorCode::InfeasibleAssignment:
    case ErrorCode::OutOfRange:
    case ErrorCode::UnknownLane:
      return 5;
    case ErrorCode::BackendError:
      return 6;
    case ErrorCode::IncompleteReport:
    case ErrorCode::UnknownAction:
    case ErrorCode::AmbiguousPosition:
      return 7;
    case ErrorCode::FragmentInvalid:
    case ErrorCode::UnknownAttribute:
    case ErrorCode::DomainExhausted:
    case ErrorCode::OperatorKindMismatch:
    case ErrorCode::InvalidOrder:
    case ErrorCode::SlotConflict:
      return 8;
    case ErrorCode::TooFewSamples:
    case ErrorCode::NonMonotonicTime:
    case ErrorCode::MissingGoal:
    case ErrorCode::DegenerateDistribution:
      return 9;
    case ErrorCode::Internal:
      return 10;
  }
  return 10;
}

}  // namespace scenforge
