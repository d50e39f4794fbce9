#ifndef PILAB_COMMON_HPP
#define PILAB_COMMON_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pilab {

enum class ErrorKind {
  invalid_hook,
  dimension_mismatch,
  dependent_basis,
  parity_mismatch,
  parity_required,
  tableau_mismatch,
  grading_required,
  unknown_builtin,
  invalid_algebra,
  internal_inconsistency,
  parse_error,
  budget_exceeded,
  usage,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` lets callers map
/// failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both must produce bit-identical results.
enum class ExecPolicy { serial, parallel };

}  // namespace pilab

#endif  // PILAB_COMMON_HPP
