#include "pilab/evaluation.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "pilab/common.hpp"
#include "pilab/envelope.hpp"

namespace pilab::codim {

EvaluationTarget EvaluationTarget::plain(AlgebraSpec algebra) {
  return EvaluationTarget(std::make_shared<const AlgebraSpec>(std::move(algebra)), TargetKind::algebra);
}

EvaluationTarget EvaluationTarget::envelope(AlgebraSpec algebra) {
  if (!algebra.is_graded()) {
    throw Error(ErrorKind::grading_required,
                "the Grassmann envelope of " + algebra.name() + " needs a grading");
  }
  if (algebra.declared_class() != algebras::AlgebraClass::lie) {
    throw Error(ErrorKind::invalid_algebra, "envelope targets need a Lie algebra");
  }
  return EvaluationTarget(std::make_shared<const AlgebraSpec>(std::move(algebra)), TargetKind::envelope);
}

bool EvaluationTarget::has_super_signs() const {
  if (algebra_->odd_dim() == 0) return false;
  return is_envelope() || algebra_->declared_class() == algebras::AlgebraClass::super_lie;
}

std::string EvaluationTarget::name() const {
  return is_envelope() ? "G(" + algebra_->name() + ")" : algebra_->name();
}

SpanningKind default_spanning(const EvaluationTarget& target, const VariableSet& vars) {
  if (!target.is_envelope() &&
      target.algebra().declared_class() == algebras::AlgebraClass::nonassociative) {
    return SpanningKind::all_bracketings;
  }
  if (vars.is_typed()) return SpanningKind::left_normed;
  return target.has_super_signs() ? SpanningKind::all_bracketings : SpanningKind::left_normed;
}

void check_signature(const EvaluationTarget& target, const VariableSet& vars) {
  if (vars.size() < 1) throw Error(ErrorKind::usage, "degree must be at least 1");
  if (vars.is_typed() && !target.algebra().is_graded()) {
    throw Error(ErrorKind::grading_required,
                "graded codimensions of " + target.name() + " need a grading");
  }
}

namespace {

/// Basis indices allowed in each slot.
std::vector<std::vector<int>> slot_choices(const AlgebraSpec& L, const VariableSet& vars) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(vars.size()));
  for (int i = 0; i < vars.size(); ++i) {
    for (int b = 0; b < L.dim(); ++b) {
      if (!vars.is_typed() || L.parity(b) == static_cast<int>(vars.parity(i))) {
        out[static_cast<std::size_t>(i)].push_back(b);
      }
    }
  }
  return out;
}

/// Calls f(tuple) for every tuple in lexicographic order.
template <class F>
void for_each_tuple(const std::vector<std::vector<int>>& choices, F&& f) {
  const std::size_t n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> pos(n, 0);
  std::vector<int> tuple(n);
  for (std::size_t i = 0; i < n; ++i) tuple[i] = choices[i][0];
  while (true) {
    f(tuple);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) {
        tuple[i] = choices[i][pos[i]];
        break;
      }
      pos[i] = 0;
      tuple[i] = choices[i][0];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

EvaluationMatrix evaluation_matrix(const EvaluationTarget& target, const VariableSet& vars,
                                   SpanningKind spanning) {
  check_signature(target, vars);
  const AlgebraSpec& L = target.algebra();
  EvaluationMatrix out;
  out.rows = freealg::generate_spanning_set(spanning, vars);
  out.coords = L.dim();
  for_each_tuple(slot_choices(L, vars), [&](const std::vector<int>& t) { out.tuples.push_back(t); });
  const std::size_t d = static_cast<std::size_t>(L.dim());
  out.matrix = exactlin::DenseMatrix<exactlin::Rational>(out.rows.size(), out.tuples.size() * d, 0);
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    for (std::size_t t = 0; t < out.tuples.size(); ++t) {
      algebras::Element value;
      int sign = 1;
      if (target.is_envelope()) {
        auto e = envelope::evaluate_on_envelope(
            L, out.rows[r], vars, envelope::EnvelopeAssignment::standard(L, out.tuples[t]));
        sign = e.sign;
        value = std::move(e.value);
      } else {
        std::vector<algebras::Element> args;
        for (int b : out.tuples[t]) args.push_back(L.table().basis_vector(b));
        value = envelope::evaluate_in_algebra(L, out.rows[r], args);
      }
      for (std::size_t k = 0; k < d; ++k) out.matrix(r, t * d + k) = sign * value[k];
    }
  }
  return out;
}

namespace {

using Table = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::internal_inconsistency, "evaluation table overflow");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::internal_inconsistency, "evaluation table overflow");
  }
  return r;
}

struct Product {
  int k;
  std::int64_t c;
};

class TableBuilder {
 public:
  TableBuilder(int dim, std::vector<std::vector<Product>> products)
      : dim_(dim), products_(std::move(products)) {}

  std::shared_ptr<const Table> get(const freealg::Shape& s) {
    if (auto it = memo_.find(s.dyck()); it != memo_.end()) return it->second;
    const auto d = static_cast<std::size_t>(dim_);
    auto out = std::make_shared<Table>();
    if (s.is_leaf()) {
      out->assign(d * d, 0);
      for (std::size_t i = 0; i < d; ++i) (*out)[i * d + i] = 1;
    } else {
      const auto left = get(s.left());
      const auto right = get(s.right());
      const std::size_t wl = left->size() / d;
      const std::size_t wr = right->size() / d;
      out->assign(wl * wr * d, 0);
      for (std::size_t ul = 0; ul < wl; ++ul) {
        for (std::size_t i = 0; i < d; ++i) {
          const std::int64_t x = (*left)[ul * d + i];
          if (x == 0) continue;
          for (std::size_t ur = 0; ur < wr; ++ur) {
            std::int64_t* dst = out->data() + (ul * wr + ur) * d;
            for (std::size_t j = 0; j < d; ++j) {
              const std::int64_t y = (*right)[ur * d + j];
              if (y == 0) continue;
              const std::int64_t xy = checked_mul(x, y);
              for (const auto& p : products_[i * d + j]) {
                dst[p.k] = checked_add(dst[p.k], checked_mul(xy, p.c));
              }
            }
          }
        }
      }
    }
    memo_.emplace(s.dyck(), out);
    return out;
  }

 private:
  int dim_;
  std::vector<std::vector<Product>> products_;
  std::map<std::string, std::shared_ptr<const Table>> memo_;
};

}  // namespace

RowEvaluator::RowEvaluator(const EvaluationTarget& target, VariableSet vars, SpanningKind spanning)
    : vars_(vars), spanning_(spanning), super_signs_(target.is_envelope()) {
  check_signature(target, vars_);
  const AlgebraSpec& L = target.algebra();
  dim_ = L.dim();
  const int n = vars_.size();
  if (dim_ > 64 || n > 16) throw Error(ErrorKind::usage, "evaluation: dimension or degree too large");
  const auto d = static_cast<std::size_t>(dim_);

  // Common denominator of the structure constants.
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), L.table().at(i, j, k).get_den_mpz_t());
      }
    }
  }
  std::vector<std::vector<Product>> products(d * d);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        const auto& c = L.table().at(i, j, k);
        if (sgn(c) == 0) continue;
        const exactlin::Integer v = c.get_num() * (scale_ / c.get_den());
        if (!v.fits_slong_p()) throw Error(ErrorKind::internal_inconsistency, "structure constant too large");
        products[static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)].push_back(
            {k, v.get_si()});
      }
    }
  }

  if (spanning_ == SpanningKind::left_normed) {
    shapes_.push_back(freealg::Shape::left_normed(n));
  } else {
    shapes_ = freealg::Shape::enumerate(n);
  }
  TableBuilder builder(dim_, std::move(products));
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    shape_index_.emplace(shapes_[s].rank(), s);
    tables_.push_back(builder.get(shapes_[s]));
  }

  // Output coordinates that survive on some rearrangement of each content.
  std::map<std::vector<std::uint8_t>, std::uint64_t> content_mask;
  std::size_t words = 1;
  for (int i = 0; i < n; ++i) words *= d;
  std::vector<std::uint8_t> counts(d);
  for (std::size_t u = 0; u < words; ++u) {
    std::uint64_t mask = 0;
    for (const auto& t : tables_) {
      for (std::size_t k = 0; k < d; ++k) {
        if ((*t)[u * d + k] != 0) mask |= 1ULL << k;
      }
    }
    if (mask == 0) continue;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t w = u, i = 0; i < static_cast<std::size_t>(n); ++i, w /= d) ++counts[w % d];
    content_mask[counts] |= mask;
  }

  for_each_tuple(slot_choices(L, vars_), [&](const std::vector<int>& t) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int b : t) ++counts[static_cast<std::size_t>(b)];
    const auto it = content_mask.find(counts);
    if (it == content_mask.end()) return;
    const auto tid = static_cast<std::uint32_t>(tuples_.size());
    std::uint32_t odd = 0;
    std::vector<std::uint8_t> digits;
    for (std::size_t i = 0; i < t.size(); ++i) {
      digits.push_back(static_cast<std::uint8_t>(t[i]));
      if (L.parity(t[i]) == 1) odd |= 1U << i;
    }
    tuples_.push_back(std::move(digits));
    odd_mask_.push_back(odd);
    col_begin_.push_back(col_tuple_.size());
    for (int k = 0; k < dim_; ++k) {
      if ((it->second >> k) & 1ULL) {
        col_tuple_.push_back(tid);
        col_coord_.push_back(k);
      }
    }
  });
  col_begin_.push_back(col_tuple_.size());
}

void RowEvaluator::row_into(const Monomial& m, std::vector<std::int64_t>& out) const {
  const auto it = shape_index_.find(m.shape().rank());
  if (m.degree() != degree() || it == shape_index_.end()) {
    throw Error(ErrorKind::dimension_mismatch, "row: monomial outside the spanning set");
  }
  const Table& table = *tables_[it->second];
  const auto& w = m.leaves();
  const auto d = static_cast<std::size_t>(dim_);
  out.assign(cols(), 0);
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    const auto& a = tuples_[t];
    std::size_t idx = 0;
    for (int v : w) idx = idx * d + a[static_cast<std::size_t>(v)];
    int sign = 0;
    for (std::size_t c = col_begin_[t]; c < col_begin_[t + 1]; ++c) {
      const std::int64_t val = table[idx * d + static_cast<std::size_t>(col_coord_[c])];
      if (val == 0) continue;
      if (sign == 0) {
        sign = 1;
        if (super_signs_ && odd_mask_[t] != 0) {
          // Parity of the odd variables' leaf order.
          const std::uint32_t odd = odd_mask_[t];
          int inversions = 0;
          std::uint32_t passed = 0;
          for (int v : w) {
            if (!((odd >> v) & 1U)) continue;
            inversions += std::popcount(passed & ~((2U << v) - 1U));
            passed |= 1U << v;
          }
          if (inversions & 1) sign = -1;
        }
      }
      out[c] = sign * val;
    }
  }
}

std::vector<std::int64_t> RowEvaluator::row(const Monomial& m) const {
  std::vector<std::int64_t> out;
  row_into(m, out);
  return out;
}

std::vector<exactlin::Rational> RowEvaluator::row(const Polynomial& f) const {
  if (!(f.vars() == vars_)) throw Error(ErrorKind::dimension_mismatch, "row: variable sets differ");
  std::vector<exactlin::Rational> out(cols(), 0);
  std::vector<std::int64_t> r;
  for (const auto& [m, c] : f.terms()) {
    row_into(m, r);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] != 0) out[i] += c * exactlin::Rational(static_cast<long>(r[i]));
    }
  }
  return out;
}

bool RowEvaluator::annihilates(const Polynomial& f) const {
  for (const auto& x : row(f)) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::vector<Monomial> RowEvaluator::seeds() const {
  const int n = degree();
  const int q = vars_.is_typed() ? vars_.even_count() : n;
  std::vector<Monomial> out;
  for (const auto& s : shapes_) {
    // Odd positions run over the m-subsets of leaf positions, lexicographically.
    std::vector<bool> odd_pos(static_cast<std::size_t>(n), false);
    std::fill(odd_pos.begin() + q, odd_pos.end(), true);
    do {
      std::vector<int> leaves;
      int x = 0, y = q;
      for (int p = 0; p < n; ++p) leaves.push_back(odd_pos[static_cast<std::size_t>(p)] ? y++ : x++);
      out.emplace_back(s, std::move(leaves));
    } while (std::next_permutation(odd_pos.begin(), odd_pos.end()));
  }
  return out;
}

std::vector<freealg::Permutation> RowEvaluator::generators() const {
  const int n = degree();
  std::vector<freealg::Permutation> out;
  auto block = [&](int from, int size) {
    if (size >= 2) out.push_back(freealg::Permutation::cycle(n, {from, from + 1}));
    if (size >= 3) {
      std::vector<int> pts;
      for (int i = 0; i < size; ++i) pts.push_back(from + i);
      out.push_back(freealg::Permutation::cycle(n, pts));
    }
  };
  if (vars_.is_typed()) {
    block(0, vars_.even_count());
    block(vars_.even_count(), vars_.odd_count());
  } else {
    block(0, n);
  }
  return out;
}

}  // namespace pilab::codim
