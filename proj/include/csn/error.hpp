#pragma once

#include <stdexcept>
#include <string>

namespace csn {

enum class ErrorCode {
  SideTooSmall,
  BadTaxon,
  DuplicateSplit,
  EmptySystem,
  TaxaMismatch,
  IncompatibleSplits,
  EnumerationBoundExceeded,
  TooFewTaxa,
  NotAnArc,
  NotCircular,
  SideClassificationFailed,
  EmbeddingError,
  Disconnected,
  TooManySplits,
  NotTreeShaped,
  KindMismatch,
  BadIndex,
  BadParameter,
  SyntaxError,
  DuplicateLeaf,
  EmptyTree,
  WeightNotPositive,
  OutOfRange,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace csn
