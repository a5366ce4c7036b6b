#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flownet {

enum class ErrorCode {
  InputError,
  ValidationError,
  LayoutMismatch,
  ClosureViolation,
  NotAPoset,
  NotAttractive,
  CompositionNotZero,
  ObstructionNonzero,
  NotEuclidean,
  InternalTheoremViolation,
};

std::string_view error_code_name(ErrorCode code);

// Input-side failures (bad files, broken contracts on arguments) as opposed
// to computation-level outcomes such as a nonzero obstruction.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace flownet
