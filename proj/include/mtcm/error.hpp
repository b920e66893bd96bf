#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtcm {

enum class ErrorCode {
  ParseError,
  InvalidIndex,
  InvalidTable,
  NotAssociative,
  NotClosed,
  OrderCapExceeded,
  NotSubgroup,
  NotInvolution,
  NotCentral,
  ConjugationFixesField,
  OddCosetCount,
  NotDisjointFromConjugate,
  WrongCardinality,
  InternalStabilityViolation,
  NotUnionOfCosets,
  Overflow,
  RankMismatch,
  LengthMismatch,
  CapExceeded,
  IoError,
};

std::string_view error_name(ErrorCode code);

// Errors that indicate a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace mtcm
