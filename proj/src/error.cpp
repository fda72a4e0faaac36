#include "addspec/error.hpp"

namespace addspec {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::MalformedInput: return "malformed-input";
    case ErrorCode::DuplicatePoint: return "duplicate-point";
    case ErrorCode::OverlappingSupport: return "overlapping-support";
    case ErrorCode::MultiplicityOneViolation: return "multiplicity-one-violation";
    case ErrorCode::NotAnSSequence: return "not-an-S-sequence";
    case ErrorCode::LoopDetected: return "loop-detected";
    case ErrorCode::NotSubset: return "not-a-subset";
    case ErrorCode::UnsolvedCase: return "unsolved-case";
    case ErrorCode::EmptyMatrix: return "empty-matrix";
    case ErrorCode::SizeCap: return "size-cap";
  }
  return "unknown";
}

}  // namespace addspec
