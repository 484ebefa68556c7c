#ifndef HAMWIT_ERRORS_HPP
#define HAMWIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamwit {

enum class ErrorCode {
  InvalidParams,
  ZeroVector,
  DimensionMismatch,
  InvalidResidue,
  RankOutOfRange,
  Overflow,
  InvalidT,
  IndexOutOfRange,
  KTooSmall,
  InvalidSpec,
  PreconditionViolation,
  NotAdjacent,
  NotAMember,
  BudgetExceeded,
  TooLarge,
  VerificationFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hamwit

#endif  // HAMWIT_ERRORS_HPP
