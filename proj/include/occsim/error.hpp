// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace occsim {

// Stable error codes; the CLI prints them as `error[<Code>]: message`.
enum class ErrorCode {
  InvalidArgument,
  SupportMismatch,
  AbsoluteContinuityViolation,
  EmptySamples,
  SampleOutOfRange,
  MalformedRow,
  UnparseableTimestamp,
  NegativeValue,
  EmptyInput,
  TooFewCounts,
  EmptyTraces,
  NoSupportedStates,
  UnresolvedModel,
  MixedZones,
  ShapeMismatch,
  NoSojourns,
  UnknownZone,
  SchemaMismatch,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace occsim
