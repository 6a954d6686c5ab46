#include "boolrep/errors.hpp"

namespace boolrep {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::UnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorCode::ExchangeFails: return "ExchangeFails";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::AllLoops: return "AllLoops";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::ChainLimitExceeded: return "ChainLimitExceeded";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::ReductionFailed: return "ReductionFailed";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace boolrep
