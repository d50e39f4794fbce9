#ifndef PILAB_CODIM_HPP
#define PILAB_CODIM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pilab/evaluation.hpp"
#include "pilab/partitions.hpp"

namespace pilab::codim {

using exactlin::Integer;
using exactlin::Rational;
using partitions::Partition;

enum class Arithmetic { automatic, exact, modular, modular_verified };

std::string_view to_string(Arithmetic a);
Arithmetic arithmetic_from_string(std::string_view s);

struct EngineOptions {
  /// automatic: exact up to degree 5, modular above.
  Arithmetic arithmetic = Arithmetic::automatic;
  std::optional<SpanningKind> spanning;
  ExecPolicy policy = ExecPolicy::parallel;
  /// Draws the prime and the random projection used to check traces.
  std::uint64_t seed = 20240229;
  /// Memory cap for stored rows in bytes; 0 means none.
  std::size_t budget_bytes = 0;
};

/// Bytes the quotient computation may hold in pivot rows, from the row and
/// column counts.
std::size_t estimate_bytes(const RowEvaluator& rows, bool exact);

/// P_n (or P_{q,m}) modulo the identities of a target, with a basis of
/// monomials found by spinning seed monomials under the symmetric group.
class QuotientModel {
 public:
  QuotientModel(const EvaluationTarget& target, VariableSet vars, const EngineOptions& options = {});
  ~QuotientModel();
  QuotientModel(QuotientModel&&) noexcept;
  QuotientModel& operator=(QuotientModel&&) noexcept;

  const VariableSet& vars() const;
  std::size_t dim() const;
  /// Monomials whose images form a basis of the quotient.
  const std::vector<Monomial>& basis() const;
  SpanningKind spanning() const;
  std::size_t columns() const;
  /// Whether the reported numbers are exact over Q.
  bool exact() const;
  /// The working prime of a modular run.
  std::optional<std::uint64_t> prime() const;
  /// modular-verified: the exact recomputation agreed.
  bool verified() const;

  /// Trace of sigma on the quotient. For typed variables sigma must
  /// preserve the two blocks. Throws internal_inconsistency when an image
  /// fails to lie in the span of the basis.
  Rational trace(const freealg::Permutation& sigma) const;
  /// Traces for several permutations, in parallel under the parallel
  /// policy; results are in input order.
  std::vector<Rational> traces(const std::vector<freealg::Permutation>& sigmas) const;

  /// m minus its expansion in the basis: an identity of the target.
  /// Requires an exact model.
  Polynomial identity_from(const Monomial& m) const;

  const RowEvaluator& evaluator() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Cocharacter {
  int n = 0;
  /// Nonzero multiplicities in reverse-lexicographic order of lambda.
  std::vector<std::pair<Partition, Integer>> entries;

  Integer codimension() const;  // sum m_lambda d_lambda
  Integer colength() const;     // sum m_lambda
  Integer max_dimension() const;
};

struct GradedCocharacter {
  int q = 0;
  int m = 0;
  std::vector<std::tuple<Partition, Partition, Integer>> entries;

  Integer codimension() const;  // sum m_{lambda,mu} d_lambda d_mu
  Integer colength() const;
};

std::size_t codimension(const EvaluationTarget& target, int n, const EngineOptions& options = {});
std::size_t graded_codimension_part(const EvaluationTarget& target, int q, int m,
                                    const EngineOptions& options = {});
/// sum_q C(n,q) c_{q,n-q}.
Integer graded_codimension(const EvaluationTarget& target, int n, const EngineOptions& options = {});

Rational trace_on_quotient(const EvaluationTarget& target, int n, const freealg::Permutation& sigma,
                           const EngineOptions& options = {});

/// Multiplicities from traces by character orthogonality. Throws
/// internal_inconsistency on a non-integral or negative multiplicity.
Cocharacter cocharacter(const QuotientModel& model);
Cocharacter cocharacter(const EvaluationTarget& target, int n, const EngineOptions& options = {});
GradedCocharacter graded_cocharacter(const QuotientModel& model);
GradedCocharacter graded_cocharacter(const EvaluationTarget& target, int q, int m,
                                     const EngineOptions& options = {});

Integer colength(const Cocharacter& d);

/// Reference path: rank of the full evaluation matrix by Bareiss.
std::size_t reference_codimension(const EvaluationTarget& target, const VariableSet& vars,
                                  SpanningKind spanning);

}  // namespace pilab::codim

#endif  // PILAB_CODIM_HPP
