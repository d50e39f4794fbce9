#ifndef PILAB_EXACTLIN_HPP
#define PILAB_EXACTLIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "pilab/common.hpp"

namespace pilab::exactlin {

using Integer = mpz_class;
using Rational = mpq_class;

/// The field Q. Stateless; exists so algorithms can be written once over
/// a field policy.
struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type from_integer(const Integer& a) const { return value_type(a); }
};

/// Z/pZ for a prime p < 2^63, values kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  /// Deterministic random prime in [2^61, 2^62) drawn from `seed`.
  static PrimeField random_62bit(std::uint64_t seed);

  std::uint64_t prime() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + (p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type inv(value_type a) const;
  value_type from_integer(const Integer& a) const;
  value_type from_int(std::int64_t a) const;
  /// Throws internal_inconsistency when the denominator vanishes mod p.
  value_type from_rational(const Rational& a) const;
  /// Representative in (-p/2, p/2].
  Integer lift_symmetric(value_type a) const;

 private:
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  static DenseMatrix identity(std::size_t n, const T& one, const T& zero) {
    DenseMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Reduces every entry mod p.
DenseMatrix<std::uint64_t> reduce_mod(const DenseMatrix<Rational>& m,
                                      const PrimeField& field);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const DenseMatrix<Rational>& m);

/// Rank over Z/pZ by Gaussian elimination.
std::size_t rank(const DenseMatrix<std::uint64_t>& m, const PrimeField& field);

/// Indices of the pivot rows found when eliminating in the given row order:
/// the lexicographically first maximal independent set of rows.
std::vector<std::size_t> image_basis(const DenseMatrix<Rational>& m);
std::vector<std::size_t> image_basis(const DenseMatrix<std::uint64_t>& m,
                                     const PrimeField& field);

/// Incremental row echelon form over a field. Pivot rows are normalized to
/// a leading 1 and inserted in order; reduction always walks the pivots in
/// insertion order, so batched and one-at-a-time insertion agree exactly.
template <class Field>
class Echelon {
 public:
  using value_type = typename Field::value_type;
  using Row = std::vector<value_type>;

  Echelon(Field field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  const Row& pivot_row(std::size_t i) const { return pivots_[i]; }

  /// Reduces `row` against pivots [from, rank()).
  void reduce(Row& row, std::size_t from = 0) const {
    for (std::size_t i = from; i < pivots_.size(); ++i) {
      const std::size_t pc = pivot_cols_[i];
      if (field_.is_zero(row[pc])) continue;
      const value_type factor = row[pc];
      const Row& p = pivots_[i];
      for (std::size_t c = pc; c < cols_; ++c) {
        if (!field_.is_zero(p[c])) row[c] = field_.sub(row[c], field_.mul(factor, p[c]));
      }
    }
  }

  /// Reduces each row against all current pivots; rows are independent so
  /// the parallel version is bit-identical to the serial one.
  void reduce_batch(std::span<Row> rows, ExecPolicy policy) const {
    const auto n = static_cast<std::int64_t>(rows.size());
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < n; ++i) reduce(rows[static_cast<std::size_t>(i)]);
    } else {
      for (std::int64_t i = 0; i < n; ++i) reduce(rows[static_cast<std::size_t>(i)]);
    }
  }

  /// Adds an already-reduced row as a pivot if it is nonzero.
  bool insert_reduced(Row row) {
    std::size_t pc = 0;
    while (pc < cols_ && field_.is_zero(row[pc])) ++pc;
    if (pc == cols_) return false;
    const value_type scale = field_.inv(row[pc]);
    for (std::size_t c = pc; c < cols_; ++c) row[c] = field_.mul(row[c], scale);
    pivots_.push_back(std::move(row));
    pivot_cols_.push_back(pc);
    return true;
  }

  bool insert(Row row) {
    reduce(row);
    return insert_reduced(std::move(row));
  }

 private:
  Field field_;
  std::size_t cols_;
  std::vector<Row> pivots_;
  std::vector<std::size_t> pivot_cols_;
};

/// Incremental fraction-free echelon form over Z (hence over Q): rows are
/// integer vectors, reduction cross-multiplies and divides out the content,
/// so no fractions are ever formed.
class IntegerEchelon {
 public:
  using value_type = Integer;
  using Row = std::vector<Integer>;

  explicit IntegerEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }

  void reduce(Row& row, std::size_t from = 0) const;
  void reduce_batch(std::span<Row> rows, ExecPolicy policy) const;
  bool insert_reduced(Row row);
  bool insert(Row row) {
    reduce(row);
    return insert_reduced(std::move(row));
  }

 private:
  std::size_t cols_;
  std::vector<Row> pivots_;
  std::vector<std::size_t> pivot_cols_;
};

/// Divides out the gcd of the entries and makes the first nonzero entry
/// positive. Returns false for the zero row.
bool normalize_content(std::vector<Integer>& row);

/// Gauss-Jordan inverse of a square matrix over a field; nullopt if
/// singular.
template <class Field>
std::optional<DenseMatrix<typename Field::value_type>> invert(
    const Field& field, DenseMatrix<typename Field::value_type> m) {
  using V = typename Field::value_type;
  const std::size_t n = m.rows();
  auto inv = DenseMatrix<V>::identity(n, field.one(), field.zero());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && field.is_zero(m(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(piv, c), m(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const V scale = field.inv(m(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) = field.mul(m(col, c), scale);
      inv(col, c) = field.mul(inv(col, c), scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || field.is_zero(m(r, col))) continue;
      const V f = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = field.sub(m(r, c), field.mul(f, m(col, c)));
        inv(r, c) = field.sub(inv(r, c), field.mul(f, inv(col, c)));
      }
    }
  }
  return inv;
}

/// Expresses vectors in the row span of a matrix with independent rows.
/// Precomputes a set of pivot columns P with B_P invertible and its inverse.
template <class Field>
class SpanSolver {
 public:
  using value_type = typename Field::value_type;

  /// Throws dependent_basis if the rows of `basis` are dependent.
  SpanSolver(Field field, DenseMatrix<value_type> basis)
      : field_(field), basis_(std::move(basis)) {
    Echelon<Field> ech(field_, basis_.cols());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      auto row = basis_.row(r);
      if (!ech.insert({row.begin(), row.end()})) {
        throw Error(ErrorKind::dependent_basis,
                    "solve_in_span: basis row " + std::to_string(r) +
                        " depends on earlier rows");
      }
    }
    pivots_ = ech.pivot_columns();
    build_inverse();
  }

  /// Uses caller-supplied pivot columns (e.g. from an echelon already built
  /// over the same rows).
  SpanSolver(Field field, DenseMatrix<value_type> basis,
             std::vector<std::size_t> pivot_columns)
      : field_(field), basis_(std::move(basis)), pivots_(std::move(pivot_columns)) {
    build_inverse();
  }

  std::size_t dim() const { return basis_.rows(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  const DenseMatrix<value_type>& basis() const { return basis_; }
  /// (B_P)^{-1}.
  const DenseMatrix<value_type>& pivot_inverse() const { return inverse_; }

  /// c with c*B = v, or nullopt if v is outside the span.
  std::optional<std::vector<value_type>> solve(std::span<const value_type> v) const {
    if (v.size() != basis_.cols()) {
      throw Error(ErrorKind::dimension_mismatch, "solve_in_span: vector length");
    }
    const std::size_t r = basis_.rows();
    std::vector<value_type> c(r, field_.zero());
    for (std::size_t j = 0; j < r; ++j) {
      const value_type& vj = v[pivots_[j]];
      if (field_.is_zero(vj)) continue;
      for (std::size_t i = 0; i < r; ++i) {
        c[i] = field_.add(c[i], field_.mul(vj, inverse_(j, i)));
      }
    }
    for (std::size_t col = 0; col < basis_.cols(); ++col) {
      value_type acc = field_.zero();
      for (std::size_t i = 0; i < r; ++i) {
        if (!field_.is_zero(c[i])) acc = field_.add(acc, field_.mul(c[i], basis_(i, col)));
      }
      if (!field_.is_zero(field_.sub(acc, v[col]))) return std::nullopt;
    }
    return c;
  }

 private:
  void build_inverse() {
    const std::size_t r = basis_.rows();
    if (pivots_.size() != r) {
      throw Error(ErrorKind::dependent_basis, "solve_in_span: pivot count");
    }
    DenseMatrix<value_type> bp(r, r, field_.zero());
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) bp(i, j) = basis_(i, pivots_[j]);
    }
    auto inv = invert(field_, std::move(bp));
    if (!inv) throw Error(ErrorKind::dependent_basis, "solve_in_span: singular pivot block");
    inverse_ = std::move(*inv);
  }

  Field field_;
  DenseMatrix<value_type> basis_;
  std::vector<std::size_t> pivots_;
  DenseMatrix<value_type> inverse_;
};

/// One-shot form of SpanSolver::solve over Q.
std::optional<std::vector<Rational>> solve_in_span(const DenseMatrix<Rational>& basis,
                                                   std::span<const Rational> v);

}  // namespace pilab::exactlin

#endif  // PILAB_EXACTLIN_HPP
