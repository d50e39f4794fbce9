#ifndef PILAB_FREEALG_HPP
#define PILAB_FREEALG_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pilab/partitions.hpp"

namespace pilab::freealg {

using Rational = mpq_class;

enum class Parity : std::uint8_t { even = 0, odd = 1 };

/// Declares the variables 0..n-1 of a multilinear space. Untyped spaces use
/// z1..zn. Typed spaces P_{q,m} put the even x1..xq first and the odd
/// y1..ym after them.
class VariableSet {
 public:
  static VariableSet untyped(int n);
  static VariableSet typed(int even, int odd);

  int size() const { return even_ + odd_; }
  bool is_typed() const { return typed_; }
  int even_count() const { return even_; }
  int odd_count() const { return odd_; }
  /// Untyped variables report even.
  Parity parity(int var) const {
    return typed_ && var >= even_ ? Parity::odd : Parity::even;
  }
  std::string name(int var) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  VariableSet(bool typed, int even, int odd) : typed_(typed), even_(even), odd_(odd) {}
  bool typed_ = false;
  int even_ = 0;
  int odd_ = 0;
};

/// A full binary bracketing with n leaves. Encoded as a Dyck word of length
/// 2(n-1): node -> '(' left ')' right, leaf -> empty.
class Shape {
 public:
  static Shape leaf();
  static Shape join(const Shape& left, const Shape& right);
  static Shape left_normed(int n);
  /// Parses a Dyck word; throws usage on malformed input.
  static Shape from_dyck(const std::string& dyck);

  /// Every shape with n leaves, in rank order. Rank 0 is left-normed.
  static std::vector<Shape> enumerate(int n);

  int leaves() const { return data_->leaves; }
  std::uint64_t rank() const { return data_->rank; }
  const std::string& dyck() const { return data_->dyck; }
  bool is_leaf() const { return data_->leaves == 1; }
  const Shape& left() const { return *data_->left; }
  const Shape& right() const { return *data_->right; }
  /// Postfix program: true pushes the next leaf, false brackets the top two.
  const std::vector<bool>& postfix() const { return data_->postfix; }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.leaves() == b.leaves() && a.rank() == b.rank();
  }
  friend std::strong_ordering operator<=>(const Shape& a, const Shape& b) {
    if (auto c = a.leaves() <=> b.leaves(); c != 0) return c;
    return a.rank() <=> b.rank();
  }

 private:
  struct Data {
    int leaves = 1;
    std::uint64_t rank = 0;
    std::string dyck;
    std::vector<bool> postfix;
    std::shared_ptr<const Shape> left;
    std::shared_ptr<const Shape> right;
  };
  explicit Shape(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

std::uint64_t catalan(int n);

/// Permutation of {0..n-1}; `image(i)` is sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// A representative of the conjugacy class: consecutive cycles
  /// (0 1 .. mu_1-1)(mu_1 ...)...
  static Permutation from_cycle_type(const partitions::CycleType& mu);
  /// Cycle on `points` mapping points[i] -> points[i+1], last -> first.
  static Permutation cycle(int n, const std::vector<int>& points);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  partitions::CycleType cycle_type() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Sign of the permutation that sorts `seq` (distinct entries).
int sequence_sign(const std::vector<int>& seq);

/// A multilinear monomial: a bracketing shape plus the variables in leaf
/// order. Total order is (shape rank, leaf order lexicographic).
class Monomial {
 public:
  Monomial(Shape shape, std::vector<int> leaves);

  const Shape& shape() const { return shape_; }
  const std::vector<int>& leaves() const { return leaves_; }
  int degree() const { return shape_.leaves(); }

  /// Bracket notation, e.g. [[x1,y2],y1].
  std::string to_string(const VariableSet& vars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.shape_ == b.shape_ && a.leaves_ == b.leaves_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.leaves_ <=> b.leaves_;
  }

 private:
  Shape shape_;
  std::vector<int> leaves_;
};

/// Parses bracket notation against `vars` (inverse of Monomial::to_string).
Monomial parse_monomial(const std::string& text, const VariableSet& vars);

/// Rational linear combination of monomials over one variable declaration.
class Polynomial {
 public:
  explicit Polynomial(VariableSet vars) : vars_(vars) {}
  Polynomial(VariableSet vars, const Monomial& m, const Rational& c = 1);

  const VariableSet& vars() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  /// c1*M1 + c2*M2 with coefficients rendered as p/q.
  std::string to_string() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Rational c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_vars(const Polynomial& other) const;
  VariableSet vars_;
  std::map<Monomial, Rational> terms_;
};

enum class SpanningKind { left_normed, all_bracketings };

std::string_view to_string(SpanningKind kind);
SpanningKind spanning_kind_from_string(std::string_view s);

/// Left-normed: n! monomials ordered by leaf permutation rank.
/// All-bracketings: Catalan(n-1) * n! monomials ordered by (shape rank,
/// permutation rank).
std::vector<Monomial> generate_spanning_set(SpanningKind kind, const VariableSet& vars);

/// Relabels leaf i as sigma(i). Typed spaces require sigma to preserve the
/// parity of every variable (parity_mismatch otherwise).
Monomial act_permutation(const Permutation& sigma, const Monomial& m,
                         const VariableSet& vars);
Polynomial act_permutation(const Permutation& sigma, const Polynomial& f);

/// Sign sgn(sigma) of the odd variables' leaf order; +1 with at most one
/// odd variable.
int tilde_sign(const Monomial& m, const VariableSet& vars);

/// Multiplies each monomial's coefficient by tilde_sign. Involutive.
/// Throws parity_required for untyped input.
Polynomial tilde(const Polynomial& f);

/// A tableau: rows of variable indices.
struct Tableau {
  std::vector<std::vector<int>> rows;

  partitions::Partition shape() const;
  std::vector<int> entries() const;
  std::vector<std::vector<int>> columns() const;
};

/// Applies the raw Young symmetrizer sum_{p in Row(T), q in Col(T)} sgn(q) p q
/// of `tx` (and then of `ty`, when given) to f. For untyped f, `tx` must
/// cover all variables and `ty` must be absent. For typed f, `tx` covers the
/// x-variables and `ty` the y-variables.
Polynomial apply_young_symmetrizer(const Tableau& tx, const std::optional<Tableau>& ty,
                                   const Polynomial& f);

}  // namespace pilab::freealg

#endif  // PILAB_FREEALG_HPP
