#pragma once

#include <stdexcept>
#include <string>

namespace boolrep {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  EmptyFamily,
  NotDownwardClosed,
  UnequalBasisSizes,
  ExchangeFails,
  NotSimple,
  AllLoops,
  GroundTooLarge,
  ChainLimitExceeded,
  InvalidWitness,
  LabelMismatch,
  ReductionFailed,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Base of every exception thrown by the library. The code is what the C API
/// translates into its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace boolrep
