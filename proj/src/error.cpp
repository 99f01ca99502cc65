#include "factorforge/error.hpp"

namespace factorforge {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NotPrimeDivisor: return "NotPrimeDivisor";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotDivisibleBy4: return "NotDivisibleBy4";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotSupersolvable: return "NotSupersolvable";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::InvalidFactorization: return "InvalidFactorization";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::UnknownClaimId: return "UnknownClaimId";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace factorforge
