#include "pilab/codim.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "parallel.hpp"
#include "pilab/common.hpp"

namespace pilab::codim {

std::string_view to_string(Arithmetic a) {
  switch (a) {
    case Arithmetic::automatic: return "auto";
    case Arithmetic::exact: return "exact";
    case Arithmetic::modular: return "modular";
    case Arithmetic::modular_verified: return "modular-verified";
  }
  return "unknown";
}

Arithmetic arithmetic_from_string(std::string_view s) {
  if (s == "auto") return Arithmetic::automatic;
  if (s == "exact") return Arithmetic::exact;
  if (s == "modular") return Arithmetic::modular;
  if (s == "modular-verified") return Arithmetic::modular_verified;
  throw Error(ErrorKind::usage, "unknown arithmetic mode '" + std::string(s) + "'");
}

std::size_t estimate_bytes(const RowEvaluator& rows, bool exact) {
  std::size_t monomials = rows.shapes().size();
  for (int i = 2; i <= rows.degree(); ++i) monomials *= static_cast<std::size_t>(i);
  const std::size_t r = std::min(monomials, rows.cols());
  return r * rows.cols() * (exact ? 40 : 8);
}

namespace {

using exactlin::PrimeField;
using exactlin::RationalField;
using freealg::Permutation;

/// Spins the seed monomials under the generators, keeping every monomial
/// whose row is independent of the rows kept before it. Rows are evaluated
/// and reduced in batches; each batch is finished in queue order against
/// the pivots it added, so the result does not depend on the policy.
template <class Ech, class Convert>
std::vector<Monomial> spin(const RowEvaluator& ev, Ech& ech, Convert convert, ExecPolicy policy) {
  using Row = typename Ech::Row;
  const auto gens = ev.generators();
  std::deque<Monomial> queue;
  std::set<Monomial> seen;
  for (auto& s : ev.seeds()) {
    if (seen.insert(s).second) queue.push_back(std::move(s));
  }
  std::vector<Monomial> basis;
  constexpr std::size_t batch = 64;
  while (!queue.empty() && ech.rank() < ev.cols()) {
    const std::size_t b = std::min(batch, queue.size());
    std::vector<Monomial> items(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(b));
    queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(b));
    const std::size_t r0 = ech.rank();
    std::vector<Row> rows(b);
    detail::parallel_for(b, policy, [&](std::size_t i) {
      std::vector<std::int64_t> raw;
      ev.row_into(items[i], raw);
      rows[i] = convert(raw);
      ech.reduce(rows[i]);
    });
    for (std::size_t i = 0; i < b; ++i) {
      ech.reduce(rows[i], r0);
      if (!ech.insert_reduced(std::move(rows[i]))) continue;
      basis.push_back(items[i]);
      for (const auto& g : gens) {
        Monomial next = freealg::act_permutation(g, items[i], ev.vars());
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return basis;
}

/// Coordinates of images in the basis: with P the pivot columns of the
/// basis rows B, c = v_P (B_P)^{-1}. Membership of v in the span is checked
/// against a random projection h: v.h must equal v_P (B_P)^{-1} B h.
class Core {
 public:
  virtual ~Core() = default;
  virtual Rational trace(const Permutation& sigma) const = 0;
  virtual std::vector<Rational> coordinates(const Monomial& m) const = 0;
};

void inconsistent(const std::string& what) { throw Error(ErrorKind::internal_inconsistency, what); }

class ExactCore final : public Core {
 public:
  ExactCore(const RowEvaluator& ev, ExecPolicy policy, std::uint64_t seed) : ev_(ev) {
    exactlin::IntegerEchelon ech(ev.cols());
    basis_ = spin(
        ev, ech,
        [](const std::vector<std::int64_t>& raw) {
          exactlin::IntegerEchelon::Row r(raw.size());
          for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != 0) r[i] = static_cast<long>(raw[i]);
          }
          return r;
        },
        policy);
    pivots_ = ech.pivot_columns();
    prepare(seed);
  }

  const std::vector<Monomial>& basis() const { return basis_; }

  std::vector<Rational> coordinates(const Monomial& m) const override {
    std::vector<std::int64_t> raw;
    ev_.row_into(m, raw);
    return solve(raw);
  }

  Rational trace(const Permutation& sigma) const override {
    Rational tr = 0;
    std::vector<std::int64_t> raw;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      ev_.row_into(freealg::act_permutation(sigma, basis_[i], ev_.vars()), raw);
      check(raw);
      for (std::size_t j = 0; j < pivots_.size(); ++j) {
        if (raw[pivots_[j]] != 0) tr += static_cast<long>(raw[pivots_[j]]) * inverse_(j, i);
      }
    }
    return tr;
  }

 private:
  void prepare(std::uint64_t seed) {
    const std::size_t r = basis_.size();
    exactlin::DenseMatrix<Rational> bp(r, r, 0);
    std::vector<Integer> bh(r, 0);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    h_.resize(ev_.cols());
    for (auto& x : h_) x = static_cast<long>(rng() % 2001) - 1000;
    std::vector<std::int64_t> raw;
    for (std::size_t i = 0; i < r; ++i) {
      ev_.row_into(basis_[i], raw);
      for (std::size_t j = 0; j < r; ++j) bp(i, j) = static_cast<long>(raw[pivots_[j]]);
      bh[i] = dot_h(raw);
    }
    auto inv = exactlin::invert(RationalField{}, bp);
    if (!inv) inconsistent("basis rows are singular on their pivot columns");
    inverse_ = std::move(*inv);
    g_.assign(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r; ++i) g_[j] += inverse_(j, i) * bh[i];
    }
  }

  Integer dot_h(const std::vector<std::int64_t>& raw) const {
    Integer s = 0;
    for (std::size_t c = 0; c < raw.size(); ++c) {
      if (raw[c] != 0) s += Integer(static_cast<long>(raw[c])) * h_[c];
    }
    return s;
  }

  void check(const std::vector<std::int64_t>& raw) const {
    Rational lhs = 0;
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      if (raw[pivots_[j]] != 0) lhs += static_cast<long>(raw[pivots_[j]]) * g_[j];
    }
    if (lhs != Rational(dot_h(raw))) inconsistent("permuted basis row is outside the quotient span");
  }

  std::vector<Rational> solve(const std::vector<std::int64_t>& raw) const {
    check(raw);
    std::vector<Rational> c(basis_.size(), 0);
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      if (raw[pivots_[j]] == 0) continue;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += static_cast<long>(raw[pivots_[j]]) * inverse_(j, i);
    }
    return c;
  }

  const RowEvaluator& ev_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> pivots_;
  exactlin::DenseMatrix<Rational> inverse_;
  std::vector<Integer> h_;
  std::vector<Rational> g_;
};

class ModularCore final : public Core {
 public:
  ModularCore(const RowEvaluator& ev, ExecPolicy policy, std::uint64_t seed)
      : ev_(ev), field_(PrimeField::random_62bit(seed)) {
    exactlin::Echelon<PrimeField> ech(field_, ev.cols());
    basis_ = spin(
        ev, ech,
        [this](const std::vector<std::int64_t>& raw) {
          std::vector<std::uint64_t> r;
          reduce(raw, r);
          return r;
        },
        policy);
    pivots_ = ech.pivot_columns();
    prepare(seed);
  }

  const std::vector<Monomial>& basis() const { return basis_; }
  std::uint64_t prime() const { return field_.prime(); }

  std::vector<Rational> coordinates(const Monomial&) const override {
    inconsistent("coordinates need an exact model");
    return {};
  }

  Rational trace(const Permutation& sigma) const override {
    std::uint64_t tr = 0;
    std::vector<std::int64_t> raw;
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      ev_.row_into(freealg::act_permutation(sigma, basis_[i], ev_.vars()), raw);
      reduce(raw, v);
      check(v);
      for (std::size_t j = 0; j < pivots_.size(); ++j) {
        const std::uint64_t x = v[pivots_[j]];
        if (x != 0) tr = field_.add(tr, field_.mul(x, inverse_(j, i)));
      }
    }
    return Rational(field_.lift_symmetric(tr));
  }

 private:
  void reduce(const std::vector<std::int64_t>& raw, std::vector<std::uint64_t>& out) const {
    out.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = field_.from_int(raw[i]);
  }

  void prepare(std::uint64_t seed) {
    const std::size_t r = basis_.size();
    exactlin::DenseMatrix<std::uint64_t> bp(r, r, 0);
    std::vector<std::uint64_t> bh(r, 0);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    h_.resize(ev_.cols());
    for (auto& x : h_) x = rng() % field_.prime();
    std::vector<std::int64_t> raw;
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < r; ++i) {
      ev_.row_into(basis_[i], raw);
      reduce(raw, v);
      for (std::size_t j = 0; j < r; ++j) bp(i, j) = v[pivots_[j]];
      bh[i] = dot_h(v);
    }
    auto inv = exactlin::invert(field_, bp);
    if (!inv) inconsistent("basis rows are singular on their pivot columns");
    inverse_ = std::move(*inv);
    g_.assign(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r; ++i) g_[j] = field_.add(g_[j], field_.mul(inverse_(j, i), bh[i]));
    }
  }

  std::uint64_t dot_h(const std::vector<std::uint64_t>& v) const {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) s = field_.add(s, field_.mul(v[c], h_[c]));
    }
    return s;
  }

  void check(const std::vector<std::uint64_t>& v) const {
    std::uint64_t lhs = 0;
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      if (v[pivots_[j]] != 0) lhs = field_.add(lhs, field_.mul(v[pivots_[j]], g_[j]));
    }
    if (lhs != dot_h(v)) inconsistent("permuted basis row is outside the quotient span");
  }

  const RowEvaluator& ev_;
  PrimeField field_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> pivots_;
  exactlin::DenseMatrix<std::uint64_t> inverse_;
  std::vector<std::uint64_t> h_;
  std::vector<std::uint64_t> g_;
};

}  // namespace

struct QuotientModel::Impl {
  EvaluationTarget target;
  RowEvaluator ev;
  EngineOptions options;
  std::unique_ptr<ExactCore> exact;
  std::unique_ptr<ModularCore> modular;
  bool verified = false;

  Impl(const EvaluationTarget& t, VariableSet vars, const EngineOptions& o)
      : target(t), ev(t, vars, o.spanning.value_or(default_spanning(t, vars))), options(o) {}

  const Core& core() const {
    if (exact) return *exact;
    return *modular;
  }
};

QuotientModel::QuotientModel(const EvaluationTarget& target, VariableSet vars, const EngineOptions& options)
    : impl_(std::make_unique<Impl>(target, vars, options)) {
  Arithmetic a = options.arithmetic;
  if (a == Arithmetic::automatic) a = vars.size() <= 5 ? Arithmetic::exact : Arithmetic::modular;
  const bool want_exact = a == Arithmetic::exact || a == Arithmetic::modular_verified;
  const bool want_modular = a == Arithmetic::modular || a == Arithmetic::modular_verified;
  if (options.budget_bytes != 0) {
    const std::size_t need = estimate_bytes(impl_->ev, want_exact);
    if (need > options.budget_bytes) {
      throw Error(ErrorKind::budget_exceeded,
                  "degree " + std::to_string(vars.size()) + " on " + target.name() + " needs about " +
                      std::to_string(need / (1024 * 1024) + 1) + " MB of pivot rows (" +
                      std::to_string(impl_->ev.cols()) + " columns), budget is " +
                      std::to_string(options.budget_bytes / (1024 * 1024)) + " MB");
    }
  }
  if (want_modular) impl_->modular = std::make_unique<ModularCore>(impl_->ev, options.policy, options.seed);
  if (want_exact) impl_->exact = std::make_unique<ExactCore>(impl_->ev, options.policy, options.seed);
  if (impl_->exact && impl_->modular) {
    if (impl_->exact->basis().size() != impl_->modular->basis().size()) {
      throw Error(ErrorKind::internal_inconsistency,
                  "modular rank " + std::to_string(impl_->modular->basis().size()) +
                      " disagrees with exact rank " + std::to_string(impl_->exact->basis().size()));
    }
    impl_->verified = true;
  }
}

QuotientModel::~QuotientModel() = default;
QuotientModel::QuotientModel(QuotientModel&&) noexcept = default;
QuotientModel& QuotientModel::operator=(QuotientModel&&) noexcept = default;

const VariableSet& QuotientModel::vars() const { return impl_->ev.vars(); }
std::size_t QuotientModel::dim() const { return basis().size(); }
const std::vector<Monomial>& QuotientModel::basis() const {
  return impl_->exact ? impl_->exact->basis() : impl_->modular->basis();
}
SpanningKind QuotientModel::spanning() const { return impl_->ev.spanning(); }
std::size_t QuotientModel::columns() const { return impl_->ev.cols(); }
bool QuotientModel::exact() const { return impl_->exact != nullptr; }
std::optional<std::uint64_t> QuotientModel::prime() const {
  if (impl_->modular) return impl_->modular->prime();
  return std::nullopt;
}
bool QuotientModel::verified() const { return impl_->verified; }
const RowEvaluator& QuotientModel::evaluator() const { return impl_->ev; }

Rational QuotientModel::trace(const freealg::Permutation& sigma) const {
  if (sigma.size() != vars().size()) {
    throw Error(ErrorKind::dimension_mismatch, "trace: permutation size differs from the degree");
  }
  const Rational tr = impl_->core().trace(sigma);
  if (impl_->exact && impl_->modular && impl_->modular->trace(sigma) != tr) {
    throw Error(ErrorKind::internal_inconsistency, "modular trace disagrees with exact trace");
  }
  return tr;
}

std::vector<Rational> QuotientModel::traces(const std::vector<freealg::Permutation>& sigmas) const {
  std::vector<Rational> out(sigmas.size());
  detail::parallel_for(sigmas.size(), impl_->options.policy,
                       [&](std::size_t i) { out[i] = trace(sigmas[i]); });
  return out;
}

Polynomial QuotientModel::identity_from(const Monomial& m) const {
  if (!impl_->exact) throw Error(ErrorKind::usage, "identity_from needs an exact model");
  const auto c = impl_->exact->coordinates(m);
  Polynomial f(vars(), m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) f.add_term(basis()[i], -c[i]);
  }
  return f;
}

Integer Cocharacter::codimension() const {
  Integer s = 0;
  for (const auto& [lambda, m] : entries) s += m * partitions::dimension(lambda);
  return s;
}

Integer Cocharacter::colength() const {
  Integer s = 0;
  for (const auto& e : entries) s += e.second;
  return s;
}

Integer Cocharacter::max_dimension() const {
  Integer best = 0;
  for (const auto& e : entries) best = std::max(best, partitions::dimension(e.first));
  return best;
}

Integer GradedCocharacter::codimension() const {
  Integer s = 0;
  for (const auto& [lambda, mu, m] : entries) {
    s += m * partitions::dimension(lambda) * partitions::dimension(mu);
  }
  return s;
}

Integer GradedCocharacter::colength() const {
  Integer s = 0;
  for (const auto& e : entries) s += std::get<2>(e);
  return s;
}

Integer colength(const Cocharacter& d) { return d.colength(); }

namespace {

Integer to_multiplicity(const Rational& sum, const Integer& order, const std::string& label) {
  Rational m = sum / Rational(order);
  if (m.get_den() != 1 || sgn(m) < 0) {
    throw Error(ErrorKind::internal_inconsistency,
                "multiplicity of " + label + " is " + m.get_str() + ", not a non-negative integer");
  }
  return m.get_num();
}

Permutation block_permutation(const Partition& alpha, const Partition& beta) {
  std::vector<int> images = Permutation::from_cycle_type(alpha).images();
  const Permutation b = Permutation::from_cycle_type(beta);
  for (int v : b.images()) images.push_back(v + alpha.size());
  return Permutation(std::move(images));
}

}  // namespace

Cocharacter cocharacter(const QuotientModel& model) {
  if (model.vars().is_typed()) throw Error(ErrorKind::usage, "cocharacter needs untyped variables");
  const int n = model.vars().size();
  const auto classes = partitions::enumerate_partitions(n);
  std::vector<Permutation> reps;
  for (const auto& mu : classes) reps.push_back(Permutation::from_cycle_type(mu));
  const auto tr = model.traces(reps);
  const Integer order = partitions::factorial(n);
  Cocharacter out;
  out.n = n;
  for (const auto& lambda : classes) {
    Rational sum = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (sgn(tr[c]) == 0) continue;
      sum += tr[c] * Rational(partitions::class_size(classes[c]) *
                              partitions::character_value(lambda, classes[c]));
    }
    Integer m = to_multiplicity(sum, order, lambda.to_string());
    if (sgn(m) != 0) out.entries.emplace_back(lambda, std::move(m));
  }
  if (out.codimension() != Integer(static_cast<unsigned long>(model.dim()))) {
    throw Error(ErrorKind::internal_inconsistency, "sum of m_lambda d_lambda differs from the rank");
  }
  return out;
}

Cocharacter cocharacter(const EvaluationTarget& target, int n, const EngineOptions& options) {
  return cocharacter(QuotientModel(target, VariableSet::untyped(n), options));
}

GradedCocharacter graded_cocharacter(const QuotientModel& model) {
  const auto& vars = model.vars();
  if (!vars.is_typed()) throw Error(ErrorKind::usage, "graded cocharacter needs typed variables");
  const int q = vars.even_count(), m = vars.odd_count();
  const auto cx = partitions::enumerate_partitions(q);
  const auto cy = partitions::enumerate_partitions(m);
  std::vector<Permutation> reps;
  for (const auto& a : cx) {
    for (const auto& b : cy) reps.push_back(block_permutation(a, b));
  }
  const auto tr = model.traces(reps);
  const Integer order = partitions::factorial(q) * partitions::factorial(m);
  GradedCocharacter out;
  out.q = q;
  out.m = m;
  for (const auto& lambda : cx) {
    for (const auto& mu : cy) {
      Rational sum = 0;
      std::size_t c = 0;
      for (const auto& a : cx) {
        for (const auto& b : cy) {
          if (sgn(tr[c]) != 0) {
            sum += tr[c] * Rational(partitions::class_size(a) * partitions::class_size(b) *
                                    partitions::character_value(lambda, a) *
                                    partitions::character_value(mu, b));
          }
          ++c;
        }
      }
      Integer mult = to_multiplicity(sum, order, lambda.to_string() + "," + mu.to_string());
      if (sgn(mult) != 0) out.entries.emplace_back(lambda, mu, std::move(mult));
    }
  }
  if (out.codimension() != Integer(static_cast<unsigned long>(model.dim()))) {
    throw Error(ErrorKind::internal_inconsistency, "graded cocharacter degree differs from the rank");
  }
  return out;
}

GradedCocharacter graded_cocharacter(const EvaluationTarget& target, int q, int m,
                                     const EngineOptions& options) {
  return graded_cocharacter(QuotientModel(target, VariableSet::typed(q, m), options));
}

std::size_t codimension(const EvaluationTarget& target, int n, const EngineOptions& options) {
  return QuotientModel(target, VariableSet::untyped(n), options).dim();
}

std::size_t graded_codimension_part(const EvaluationTarget& target, int q, int m,
                                    const EngineOptions& options) {
  if (q < 0 || m < 0 || q + m < 1) throw Error(ErrorKind::usage, "graded part needs q + m >= 1");
  if (!target.algebra().is_graded()) {
    throw Error(ErrorKind::grading_required, target.name() + " has no grading");
  }
  return QuotientModel(target, VariableSet::typed(q, m), options).dim();
}

Integer graded_codimension(const EvaluationTarget& target, int n, const EngineOptions& options) {
  Integer total = 0;
  Integer binom = 1;
  for (int q = 0; q <= n; ++q) {
    const auto part = graded_codimension_part(target, q, n - q, options);
    total += binom * Integer(static_cast<unsigned long>(part));
    binom = binom * (n - q) / (q + 1);
  }
  return total;
}

Rational trace_on_quotient(const EvaluationTarget& target, int n, const freealg::Permutation& sigma,
                           const EngineOptions& options) {
  return QuotientModel(target, VariableSet::untyped(n), options).trace(sigma);
}

std::size_t reference_codimension(const EvaluationTarget& target, const VariableSet& vars,
                                  SpanningKind spanning) {
  return exactlin::rank(evaluation_matrix(target, vars, spanning).matrix);
}

}  // namespace pilab::codim
