#include "pilab/common.hpp"

namespace pilab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_hook: return "invalid-hook";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::dependent_basis: return "dependent-basis";
    case ErrorKind::parity_mismatch: return "parity-mismatch";
    case ErrorKind::parity_required: return "parity-required";
    case ErrorKind::tableau_mismatch: return "tableau-mismatch";
    case ErrorKind::grading_required: return "grading-required";
    case ErrorKind::unknown_builtin: return "unknown-builtin";
    case ErrorKind::invalid_algebra: return "invalid-algebra";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

}  // namespace pilab
