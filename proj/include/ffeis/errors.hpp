#pragma once

#include <stdexcept>
#include <string>

namespace ffeis {

// Machine-readable codes for every validation failure the library can raise.
// The CLI maps any Error to exit code 1; identity failures found by the
// verify driver map to exit code 2.
enum class ErrorCode {
  NonUnitConstantTerm,
  NonZeroConstantTerm,
  EnumerationBudget,
  ModelInvariantViolation,
  CountInconsistency,
  ZetaFEViolation,
  NotADoubleCoverPair,
  DegreeMismatch,
  FEViolation,
  DensityDegreeMismatch,
  HalvingHypothesisViolation,
  FamilyInconsistency,
  InputError,
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

}  // namespace ffeis
