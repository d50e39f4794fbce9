#ifndef PILAB_ALGEBRAS_HPP
#define PILAB_ALGEBRAS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pilab::algebras {

using Rational = mpq_class;
using Element = std::vector<Rational>;

enum class AlgebraClass { lie, super_lie, nonassociative };

std::string_view to_string(AlgebraClass c);
AlgebraClass algebra_class_from_string(std::string_view s);

/// Raw structure constants c_{ij}^k with [b_i, b_j] = sum_k c_{ij}^k b_k.
/// No validation; this is what the validators inspect.
class StructureConstants {
 public:
  explicit StructureConstants(int dim)
      : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0) {}

  int dim() const { return dim_; }
  Rational& at(int i, int j, int k) { return data_[index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return data_[index(i, j, k)]; }

  /// Bilinear extension of the table.
  Element bracket(const Element& u, const Element& v) const;
  Element basis_vector(int i) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_;
  std::vector<Rational> data_;
};

/// A failing identity instance on basis indices (0-based). `j`/`k` are -1
/// when the identity involves fewer elements.
struct IdentityWitness {
  std::string identity;
  int i = -1;
  int j = -1;
  int k = -1;

  std::string to_string() const;
};

/// nullopt means pass.
using Validation = std::optional<IdentityWitness>;

/// [b_i,b_i] = 0, [b_i,b_j] + [b_j,b_i] = 0 and the Jacobi identity on all
/// basis triples.
Validation validate_lie(const StructureConstants& table);

/// Super-anticommutativity and the super-Jacobi identity on homogeneous
/// basis triples. Throws grading_required when `grading` is empty.
Validation validate_super_lie(const StructureConstants& table, const std::vector<int>& grading);

/// [L_i, L_j] within L_{i+j mod 2} on all basis pairs.
Validation check_grading(const StructureConstants& table, const std::vector<int>& grading);

/// A finite-dimensional algebra, certified at construction: the declared
/// class and the grading (if any) are validated eagerly and a failure
/// throws invalid_algebra.
class AlgebraSpec {
 public:
  AlgebraSpec(std::string name, std::vector<std::string> basis, StructureConstants table,
              std::optional<std::vector<int>> grading, AlgebraClass declared);

  const std::string& name() const { return name_; }
  int dim() const { return table_.dim(); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const StructureConstants& table() const { return table_; }
  AlgebraClass declared_class() const { return class_; }

  bool is_graded() const { return grading_.has_value(); }
  const std::optional<std::vector<int>>& grading() const { return grading_; }
  /// Parity of b_i; ungraded algebras are all even.
  int parity(int i) const { return grading_ ? (*grading_)[static_cast<std::size_t>(i)] : 0; }
  int even_dim() const;
  int odd_dim() const;

  /// Throws dimension_mismatch when lengths differ from dim().
  Element bracket(const Element& u, const Element& v) const;

  /// Dimension of the center {z : [z, b_i] = 0 for all i}.
  int center_dim() const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  StructureConstants table_;
  std::optional<std::vector<int>> grading_;
  AlgebraClass class_;
};

/// metabelian, abelian(d) (also abelianD), sl2-cartan, sl2-trivial,
/// heisenberg. Throws unknown_builtin.
AlgebraSpec builtin(std::string_view name);

std::vector<std::string> builtin_names();

/// Algebra JSON: {"dim","basis","grading"?,"class","table"}, table[i][j] a
/// list of dim coefficient strings "p/q". Throws parse_error with
/// line/column, or invalid_algebra.
AlgebraSpec parse_algebra_json(const std::string& text, const std::string& name = "custom");
std::string to_json(const AlgebraSpec& a);

/// Builtin name or path to a JSON file.
AlgebraSpec load_algebra(const std::string& name_or_path);

}  // namespace pilab::algebras

#endif  // PILAB_ALGEBRAS_HPP
