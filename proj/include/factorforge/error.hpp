#pragma once

#include <stdexcept>
#include <string>

namespace factorforge {

enum class ErrorCode {
  OrderExceedsCap,
  InvalidPermutation,
  InvalidTable,
  NotAnAutomorphism,
  NotAHomomorphism,
  UnknownName,
  UnknownGenerator,
  NotPrimeDivisor,
  NotNormal,
  NotADivisor,
  NotASubgroup,
  OddOrder,
  ShapeMismatch,
  NotDivisibleBy4,
  TooLarge,
  NotSupersolvable,
  IdentityFails,
  InvalidFactorization,
  ParseError,
  OrderMismatch,
  UnknownClaimId,
  Overflow,
};

const char* to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` names the
/// failure so callers (and the CLI's exit codes) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace factorforge
