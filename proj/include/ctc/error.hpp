#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctc {

enum class ErrorCode {
  FieldMismatch,
  DivisionByZero,
  NoEmbedding,
  InvalidField,
  ParseError,
  InvalidCategory,
  CategoryMismatch,
  DomainMismatch,
  ShapeMismatch,
  UnitMultiplicityNotOne,
  NotRigidSelfDual,
  NonUnique,
  NotScalarMultiple,
  InvalidGroupTable,
  NotIsotropic,
  MissingStructure,
  AlgebraMismatch,
  NotAlgebraAutomorphism,
  IndexZero,
  NotASection,
  NotALift,
  NotSurjective,
  NotCommutative,
  RadicalAlgorithmUnavailable,
  Underdetermined,
  Inconsistent,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ctc
