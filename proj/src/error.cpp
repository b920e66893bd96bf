#include "mtcm/error.hpp"

namespace mtcm {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::ConjugationFixesField: return "ConjugationFixesField";
    case ErrorCode::OddCosetCount: return "OddCosetCount";
    case ErrorCode::NotDisjointFromConjugate: return "NotDisjointFromConjugate";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::InternalStabilityViolation: return "InternalStabilityViolation";
    case ErrorCode::NotUnionOfCosets: return "NotUnionOfCosets";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::InternalStabilityViolation ||
         code == ErrorCode::OddCosetCount;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace mtcm
