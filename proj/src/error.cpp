#include "flownet/error.hpp"
#include "flownet/report.hpp"

namespace flownet {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InputError: return "InputError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::LayoutMismatch: return "LayoutMismatch";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotAttractive: return "NotAttractive";
    case ErrorCode::CompositionNotZero: return "CompositionNotZero";
    case ErrorCode::ObstructionNonzero: return "ObstructionNonzero";
    case ErrorCode::NotEuclidean: return "NotEuclidean";
    case ErrorCode::InternalTheoremViolation: return "InternalTheoremViolation";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InputError:
    case ErrorCode::ValidationError:
    case ErrorCode::LayoutMismatch:
    case ErrorCode::ClosureViolation:
    case ErrorCode::NotAPoset:
    case ErrorCode::NotAttractive:
      return true;
    default:
      return false;
  }
}

}  // namespace flownet

namespace flownet {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.id.empty() ? v.message : v.id + ": " + v.message;
  }
  return out;
}

}  // namespace flownet
