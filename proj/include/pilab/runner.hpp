#ifndef PILAB_RUNNER_HPP
#define PILAB_RUNNER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pilab/checks.hpp"
#include "pilab/report.hpp"

namespace pilab::runner {

struct RunConfig {
  std::string algebra = "metabelian";
  codim::TargetKind target = codim::TargetKind::algebra;
  bool graded = false;
  int n_from = 1;
  int n_to = 1;
  codim::Arithmetic arithmetic = codim::Arithmetic::automatic;
  std::optional<freealg::SpanningKind> spanning;
  ExecPolicy policy = ExecPolicy::parallel;
  std::uint64_t seed = 20240229;
  /// Cap on stored pivot rows; 0 means none.
  std::size_t budget_bytes = 0;
  /// Permits degrees above default_max_degree.
  bool allow_large = false;
  int trials = 500;
  std::optional<partitions::HookSpec> hook;
  /// Receives progress and estimate lines; may be empty.
  std::function<void(const std::string&)> log;
};

codim::EvaluationTarget make_target(const RunConfig& config);

/// 8 for plain algebras of dimension at most 3, 6 otherwise.
int default_max_degree(const codim::EvaluationTarget& target);

/// Upper estimate of pivot-row memory at degree n, from the shape count,
/// n! and the unpruned column count.
double estimate_megabytes(const codim::EvaluationTarget& target, int n, bool exact);

/// Throws budget_exceeded (with the estimate) when the degree range passes
/// the default budget and allow_large is off; otherwise logs the estimate
/// for large degrees.
void check_degree_budget(const RunConfig& config, const codim::EvaluationTarget& target);

report::Report run_codim(const RunConfig& config);

std::vector<std::string> suite_names();
/// Throws usage for an unknown suite.
report::Report run_check(const RunConfig& config, const std::string& suite);

/// Codimension trend with the reference exponent, or, with `hook` set, the
/// growth of d_{h(k,l,d)} at the degrees n = kl + d(k+l) in range.
report::Report run_exponent(const RunConfig& config);

/// Reference exponent and its justification, if one is known.
std::optional<std::pair<std::string, std::string>> reference_exponent(const codim::EvaluationTarget& target);

}  // namespace pilab::runner

#endif  // PILAB_RUNNER_HPP
