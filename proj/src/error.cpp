// SPDX-License-Identifier: Apache-2.0
#include "occsim/error.hpp"

namespace occsim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::AbsoluteContinuityViolation: return "AbsoluteContinuityViolation";
    case ErrorCode::EmptySamples: return "EmptySamples";
    case ErrorCode::SampleOutOfRange: return "SampleOutOfRange";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::UnparseableTimestamp: return "UnparseableTimestamp";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooFewCounts: return "TooFewCounts";
    case ErrorCode::EmptyTraces: return "EmptyTraces";
    case ErrorCode::NoSupportedStates: return "NoSupportedStates";
    case ErrorCode::UnresolvedModel: return "UnresolvedModel";
    case ErrorCode::MixedZones: return "MixedZones";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NoSojourns: return "NoSojourns";
    case ErrorCode::UnknownZone: return "UnknownZone";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace occsim
