#ifndef PILAB_EVALUATION_HPP
#define PILAB_EVALUATION_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pilab/algebras.hpp"
#include "pilab/exactlin.hpp"
#include "pilab/freealg.hpp"

namespace pilab::codim {

using algebras::AlgebraSpec;
using freealg::Monomial;
using freealg::Polynomial;
using freealg::SpanningKind;
using freealg::VariableSet;

enum class TargetKind { algebra, envelope };

/// What multilinear polynomials are evaluated on: the algebra itself or its
/// Grassmann envelope G(L).
class EvaluationTarget {
 public:
  static EvaluationTarget plain(AlgebraSpec algebra);
  /// Throws grading_required for an ungraded algebra and invalid_algebra
  /// unless the algebra is declared lie.
  static EvaluationTarget envelope(AlgebraSpec algebra);

  const AlgebraSpec& algebra() const { return *algebra_; }
  TargetKind kind() const { return kind_; }
  bool is_envelope() const { return kind_ == TargetKind::envelope; }
  /// Odd elements anticommute up to sign: envelope of an algebra with odd
  /// part, or a super-lie algebra with odd part.
  bool has_super_signs() const;
  /// "metabelian" or "G(metabelian)".
  std::string name() const;

 private:
  EvaluationTarget(std::shared_ptr<const AlgebraSpec> a, TargetKind k)
      : algebra_(std::move(a)), kind_(k) {}
  std::shared_ptr<const AlgebraSpec> algebra_;
  TargetKind kind_;
};

/// Left-normed for (super-)Lie targets unless odd elements enter ordinary
/// (untyped) substitutions, where super-anticommutativity is not an
/// ordinary identity; all bracketings otherwise.
SpanningKind default_spanning(const EvaluationTarget& target, const VariableSet& vars);

/// Throws grading_required when `vars` is typed and the algebra has no
/// grading.
void check_signature(const EvaluationTarget& target, const VariableSet& vars);

/// The unpruned evaluation matrix, computed by direct recursive evaluation.
/// Rows follow generate_spanning_set; columns are (basis tuple, output
/// coordinate) in lexicographic order, restricted for typed variables to
/// tuples with x-slots even and y-slots odd.
struct EvaluationMatrix {
  std::vector<Monomial> rows;
  std::vector<std::vector<int>> tuples;
  int coords = 0;
  exactlin::DenseMatrix<exactlin::Rational> matrix;
};

EvaluationMatrix evaluation_matrix(const EvaluationTarget& target, const VariableSet& vars,
                                   SpanningKind spanning);

/// Fast evaluation rows. Values of every bracketing shape on every basis
/// word are tabulated once; the structure constants are scaled to integers
/// by their common denominator D, which multiplies every degree-n row by
/// D^(n-1) and so changes neither ranks nor traces. Columns that vanish on
/// every rearrangement of their basis tuple are dropped.
class RowEvaluator {
 public:
  RowEvaluator(const EvaluationTarget& target, VariableSet vars, SpanningKind spanning);

  const VariableSet& vars() const { return vars_; }
  SpanningKind spanning() const { return spanning_; }
  int degree() const { return vars_.size(); }
  std::size_t cols() const { return col_tuple_.size(); }
  const std::vector<freealg::Shape>& shapes() const { return shapes_; }
  /// The integer D.
  const exactlin::Integer& scale() const { return scale_; }

  /// Scaled evaluation row of a monomial whose shape is in shapes().
  std::vector<std::int64_t> row(const Monomial& m) const;
  void row_into(const Monomial& m, std::vector<std::int64_t>& out) const;

  /// Scaled evaluation row of a polynomial over Q.
  std::vector<exactlin::Rational> row(const Polynomial& f) const;
  /// True iff f vanishes on the target.
  bool annihilates(const Polynomial& f) const;

  /// One monomial per shape, per arrangement of the odd positions for
  /// typed variables; their S_n (or S_q x S_m) orbits span P.
  std::vector<Monomial> seeds() const;
  /// Generators of the acting group.
  std::vector<freealg::Permutation> generators() const;

 private:
  VariableSet vars_;
  SpanningKind spanning_;
  bool super_signs_ = false;
  int dim_ = 0;
  exactlin::Integer scale_ = 1;
  std::vector<freealg::Shape> shapes_;
  std::unordered_map<std::uint64_t, std::size_t> shape_index_;
  // tables_[s][word * dim + k]
  std::vector<std::shared_ptr<const std::vector<std::int64_t>>> tables_;
  // Columns grouped by tuple: tuple t occupies [col_begin_[t], col_begin_[t+1]).
  std::vector<std::vector<std::uint8_t>> tuples_;
  std::vector<std::uint32_t> odd_mask_;
  std::vector<std::size_t> col_begin_;
  std::vector<std::uint32_t> col_tuple_;
  std::vector<int> col_coord_;
};

}  // namespace pilab::codim

#endif  // PILAB_EVALUATION_HPP
