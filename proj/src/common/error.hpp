#pragma once

#include <stdexcept>
#include <string>

namespace starprod {

enum class ErrorCode {
  kInvalidArgument,
  kNotPrime,
  kTooLarge,
  kNoModulusTableEntry,
  kDivisionByZero,
  kZeroCode,
  kLengthMismatch,
  kFieldMismatch,
  kZeroDual,
  kBudgetExceeded,
  kDegenerateInput,
  kNeitherMds,
  kUncoveredCase,
  kBadRange,
  kRejectionBudgetExceeded,
  kNotMonomial,
  kNotBinary,
  kIo,
  kParse,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoModulusTableEntry: return "NoModulusTableEntry";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kZeroCode: return "ZeroCode";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kZeroDual: return "ZeroDual";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kNeitherMds: return "NeitherMDS";
    case ErrorCode::kUncoveredCase: return "UncoveredCase";
    case ErrorCode::kBadRange: return "BadRange";
    case ErrorCode::kRejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::kNotMonomial: return "NotMonomial";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace starprod
