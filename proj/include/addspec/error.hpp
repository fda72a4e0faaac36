#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addspec {

enum class ErrorCode {
  InvalidArgument,
  MalformedInput,
  DuplicatePoint,
  OverlappingSupport,
  MultiplicityOneViolation,
  NotAnSSequence,
  LoopDetected,
  NotSubset,
  UnsolvedCase,
  EmptyMatrix,
  SizeCap,
};

/// Stable kebab-case identifier used in machine-readable error objects.
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace addspec
