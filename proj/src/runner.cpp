#include "pilab/runner.hpp"

#include <chrono>
#include <cmath>

#include "pilab/common.hpp"

namespace pilab::runner {

using codim::EngineOptions;
using codim::EvaluationTarget;
using codim::Integer;
using codim::QuotientModel;
using freealg::VariableSet;
using report::CheckEntry;
using report::Report;

EvaluationTarget make_target(const RunConfig& config) {
  auto L = algebras::load_algebra(config.algebra);
  if (config.target == codim::TargetKind::envelope) return EvaluationTarget::envelope(std::move(L));
  return EvaluationTarget::plain(std::move(L));
}

int default_max_degree(const EvaluationTarget& target) {
  return !target.is_envelope() && target.algebra().dim() <= 3 ? 8 : 6;
}

double estimate_megabytes(const EvaluationTarget& target, int n, bool exact) {
  const auto spanning = codim::default_spanning(target, VariableSet::untyped(n));
  double rows = spanning == freealg::SpanningKind::left_normed ? 1.0 : static_cast<double>(freealg::catalan(n - 1));
  for (int i = 2; i <= n; ++i) rows *= i;
  const double cols = std::pow(static_cast<double>(target.algebra().dim()), n + 1);
  return std::min(rows, cols) * cols * (exact ? 40.0 : 8.0) / (1024.0 * 1024.0);
}

namespace {

void log(const RunConfig& c, const std::string& s) {
  if (c.log) c.log(s);
}

std::string megabytes(double mb) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f MB", mb);
  return buf;
}

bool uses_exact(const RunConfig& c, int n) {
  switch (c.arithmetic) {
    case codim::Arithmetic::exact:
    case codim::Arithmetic::modular_verified: return true;
    case codim::Arithmetic::modular: return false;
    case codim::Arithmetic::automatic: return n <= 5;
  }
  return true;
}

EngineOptions engine_options(const RunConfig& c) {
  EngineOptions o;
  o.arithmetic = c.arithmetic;
  o.spanning = c.spanning;
  o.policy = c.policy;
  o.seed = c.seed;
  o.budget_bytes = c.budget_bytes;
  return o;
}

void check_range(const RunConfig& c) {
  if (c.n_from < 1 || c.n_to < c.n_from) throw Error(ErrorKind::usage, "degree range must satisfy 1 <= A <= B");
}

Report skeleton(const RunConfig& c, const EvaluationTarget& target) {
  Report r;
  r.target = target.name();
  r.mode = target.is_envelope() ? (c.graded ? "envelope-graded" : "envelope") : (c.graded ? "graded" : "ordinary");
  r.arithmetic = std::string(codim::to_string(c.arithmetic));
  r.spanning = std::string(freealg::to_string(
      c.spanning.value_or(codim::default_spanning(target, VariableSet::untyped(std::max(2, c.n_from))))));
  r.seed = c.seed;
  return r;
}

void note_model(Report& r, const QuotientModel& m) {
  if (m.prime()) r.prime = m.prime();
  if (m.verified()) r.verified = true;
}

Integer binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Integer as_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

void fill_trend(Report& r, bool centerless) {
  std::vector<std::pair<int, Integer>> seq;
  for (const auto& row : r.rows) seq.emplace_back(row.n, row.c_n);
  const auto trend = codim::exponent_report(seq, centerless);
  for (std::size_t i = 0; i < trend.size(); ++i) {
    r.rows[i].root = trend[i].root;
    r.rows[i].ratio = trend[i].ratio;
    r.rows[i].monotonicity_violation = trend[i].monotonicity_violation;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void check_degree_budget(const RunConfig& config, const EvaluationTarget& target) {
  check_range(config);
  const int limit = default_max_degree(target);
  if (config.n_to <= limit) return;
  const double mb = estimate_megabytes(target, config.n_to, uses_exact(config, config.n_to));
  const std::string msg = "degree " + std::to_string(config.n_to) + " exceeds the default budget n <= " +
                          std::to_string(limit) + " for " + target.name() + "; memory estimate " +
                          megabytes(mb);
  if (!config.allow_large) throw Error(ErrorKind::budget_exceeded, msg + " (pass --allow-large to run anyway)");
  log(config, msg);
}

Report run_codim(const RunConfig& config) {
  const auto target = make_target(config);
  check_degree_budget(config, target);
  const auto opts = engine_options(config);
  Report r = skeleton(config, target);
  if (config.graded && !target.algebra().is_graded()) {
    throw Error(ErrorKind::grading_required, target.name() + " has no grading");
  }
  for (int n = config.n_from; n <= config.n_to; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    report::Row row;
    row.n = n;
    QuotientModel model(target, VariableSet::untyped(n), opts);
    note_model(r, model);
    row.c_n = as_integer(model.dim());
    row.cocharacter = codim::cocharacter(model);
    const auto sandwich = codim::check_sandwich(*row.cocharacter);
    r.checks.push_back({"sandwich_n=" + std::to_string(n), sandwich.pass,
                        sandwich.lhs.get_str() + " <= " + row.c_n.get_str() + " <= " + sandwich.rhs.get_str()});
    if (config.graded) {
      Integer total = 0;
      for (int q = 0; q <= n; ++q) {
        QuotientModel typed(target, VariableSet::typed(q, n - q), opts);
        note_model(r, typed);
        report::GradedPart part;
        part.q = q;
        part.m = n - q;
        part.c = as_integer(typed.dim());
        part.cocharacter = codim::graded_cocharacter(typed);
        total += binomial(n, q) * part.c;
        row.graded.push_back(std::move(part));
      }
      row.c_n_gr = total;
    }
    r.rows.push_back(std::move(row));
    r.timings.emplace_back(n, seconds_since(t0));
    log(config, "n=" + std::to_string(n) + " done");
  }
  fill_trend(r, target.algebra().center_dim() == 0);
  return r;
}

std::vector<std::string> suite_names() { return {"hooks", "duality", "tilde", "bounds", "oracle"}; }

namespace {

std::string hook_name(partitions::HookSpec h) {
  return "H(" + std::to_string(h.k) + "," + std::to_string(h.l) + ")";
}

std::string signature_name(int q, int m) {
  return "(q,m)=(" + std::to_string(q) + "," + std::to_string(m) + ")";
}

void require_graded(const EvaluationTarget& t) {
  if (!t.algebra().is_graded()) throw Error(ErrorKind::grading_required, t.name() + " has no grading");
}

void suite_hooks(const RunConfig& c, const EvaluationTarget& target, const EngineOptions& opts, Report& r) {
  const auto& L = target.algebra();
  const int k = L.even_dim(), l = L.odd_dim();
  const partitions::HookSpec ordinary = target.is_envelope() ? partitions::HookSpec{k, l}
                                                             : partitions::HookSpec{L.dim(), 0};
  for (int n = c.n_from; n <= c.n_to; ++n) {
    QuotientModel model(target, VariableSet::untyped(n), opts);
    note_model(r, model);
    const auto d = codim::cocharacter(model);
    const auto w = codim::check_hook_constraint(d, ordinary);
    r.checks.push_back({"hook_" + hook_name(ordinary) + "_n=" + std::to_string(n), !w,
                        w ? "witness " + w->to_string() : ""});
    if (!L.is_graded()) continue;
    // Graded cocharacters: G(L) has lambda in H(k,0), mu in H(0,l); L itself
    // has lambda in H(k,0), mu in H(l,0).
    const partitions::HookSpec lh{k, 0};
    const partitions::HookSpec mh = target.is_envelope() ? partitions::HookSpec{0, l} : partitions::HookSpec{l, 0};
    for (int q = 0; q <= n; ++q) {
      QuotientModel typed(target, VariableSet::typed(q, n - q), opts);
      note_model(r, typed);
      const auto g = codim::graded_cocharacter(typed);
      const auto gw = codim::check_hook_constraint(g, lh, mh);
      r.checks.push_back({"hook_" + hook_name(lh) + "x" + hook_name(mh) + "_" + signature_name(q, n - q), !gw,
                          gw ? "witness " + gw->first.to_string() + "x" + gw->second.to_string() : ""});
    }
  }
}

void suite_duality(const RunConfig& c, const EvaluationTarget& target, const EngineOptions& opts, Report& r) {
  require_graded(target);
  for (int n = c.n_from; n <= c.n_to; ++n) {
    for (int q = 0; q <= n; ++q) {
      const auto w = codim::check_conjugate_duality(target.algebra(), q, n - q, opts);
      r.checks.push_back({"duality_" + signature_name(q, n - q), !w,
                          w ? "m(" + w->lambda.to_string() + "," + w->mu.to_string() + ") = " + w->plain.get_str() +
                                  " on L but " + w->envelope.get_str() + " on G(L) with mu conjugated"
                            : ""});
    }
  }
}

void suite_tilde(const RunConfig& c, const EvaluationTarget& target, const EngineOptions& opts, Report& r) {
  require_graded(target);
  const auto t = codim::check_tilde_identity_correspondence(target.algebra(), c.trials, c.n_to, c.seed, opts);
  r.checks.push_back({"tilde_correspondence", t.pass(),
                      t.witness ? *t.witness
                                : std::to_string(t.trials) + " polynomials, " + std::to_string(t.identities) +
                                      " identities of L"});
}

void suite_bounds(const RunConfig& c, const EvaluationTarget& target, const EngineOptions& opts, Report& r) {
  const auto& L = target.algebra();
  for (int n = c.n_from; n <= c.n_to; ++n) {
    QuotientModel model(target, VariableSet::untyped(n), opts);
    note_model(r, model);
    const auto d = codim::cocharacter(model);
    const auto s = codim::check_sandwich(d);
    const std::string cn = as_integer(model.dim()).get_str();
    r.checks.push_back({"sandwich_n=" + std::to_string(n), s.pass,
                        s.lhs.get_str() + " <= " + cn + " <= " + s.rhs.get_str()});
    if (target.is_envelope()) {
      const auto b = codim::check_colength_bound(d, L.even_dim(), L.odd_dim());
      r.checks.push_back({"colength_bound_n=" + std::to_string(n), b.pass,
                          "l_n = " + b.lhs.get_str() + " < " + b.rhs.get_str()});
    }
    if (L.is_graded()) {
      const auto gr = codim::graded_codimension(target, n, opts);
      r.checks.push_back({"graded_vs_ordinary_n=" + std::to_string(n), gr >= as_integer(model.dim()),
                          "c_n^gr = " + gr.get_str() + " >= c_n = " + cn});
    }
  }
}

void suite_oracle(const RunConfig& c, const EvaluationTarget& target, const EngineOptions& opts, Report& r) {
  const auto& L = target.algebra();
  const bool lie_like = target.is_envelope() || L.declared_class() != algebras::AlgebraClass::nonassociative;
  for (int n = c.n_from; n <= c.n_to; ++n) {
    std::vector<VariableSet> signatures{VariableSet::untyped(n)};
    if (L.is_graded()) {
      for (int q = 0; q <= n; ++q) signatures.push_back(VariableSet::typed(q, n - q));
    }
    for (const auto& vars : signatures) {
      const std::string where = vars.is_typed() ? signature_name(vars.even_count(), vars.odd_count())
                                                : "n=" + std::to_string(n);
      if (lie_like && n >= 3) {
        auto o = opts;
        o.spanning = freealg::SpanningKind::left_normed;
        const auto ln = QuotientModel(target, vars, o).dim();
        o.spanning = freealg::SpanningKind::all_bracketings;
        const auto ab = QuotientModel(target, vars, o).dim();
        r.checks.push_back({"spanning_equivalence_" + where, ln == ab,
                            "left-normed " + std::to_string(ln) + ", all-bracketings " + std::to_string(ab)});
      }
      if (n <= 5) {
        const auto spanning = opts.spanning.value_or(codim::default_spanning(target, vars));
        const auto fast = QuotientModel(target, vars, opts).dim();
        const auto ref = codim::reference_codimension(target, vars, spanning);
        r.checks.push_back({"reference_rank_" + where, fast == ref,
                            "engine " + std::to_string(fast) + ", dense Bareiss " + std::to_string(ref)});
      }
      auto o = opts;
      o.arithmetic = codim::Arithmetic::modular_verified;
      try {
        QuotientModel verified(target, vars, o);
        r.checks.push_back({"modular_vs_exact_" + where, true,
                            "rank " + std::to_string(verified.dim()) + " mod p = " + std::to_string(*verified.prime())});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::internal_inconsistency) throw;
        r.checks.push_back({"modular_vs_exact_" + where, false, e.what()});
      }
    }
  }
  if (target.is_envelope()) {
    const auto w = codim::check_envelope_oracle(L, 1000, std::min(c.n_to, 6), c.seed);
    r.checks.push_back({"envelope_oracle", !w, w ? "disagreement on " + *w : "1000 random cases"});
  }
}

}  // namespace

Report run_check(const RunConfig& config, const std::string& suite) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorKind::usage, "unknown suite '" + suite + "' (hooks, duality, tilde, bounds, oracle)");
  }
  const auto target = make_target(config);
  check_degree_budget(config, target);
  const auto opts = engine_options(config);
  Report r = skeleton(config, target);
  r.mode = "check:" + suite;
  if (suite == "hooks") suite_hooks(config, target, opts, r);
  if (suite == "duality") suite_duality(config, target, opts, r);
  if (suite == "tilde") suite_tilde(config, target, opts, r);
  if (suite == "bounds") suite_bounds(config, target, opts, r);
  if (suite == "oracle") suite_oracle(config, target, opts, r);
  return r;
}

namespace {

/// Span of a list of vectors, as independent rows.
std::vector<algebras::Element> span_of(const std::vector<algebras::Element>& vs, int dim) {
  exactlin::DenseMatrix<exactlin::Rational> m(vs.size(), static_cast<std::size_t>(dim), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (int k = 0; k < dim; ++k) m(i, static_cast<std::size_t>(k)) = vs[i][static_cast<std::size_t>(k)];
  }
  std::vector<algebras::Element> out;
  for (auto i : exactlin::image_basis(m)) out.push_back(vs[i]);
  return out;
}

}  // namespace

std::optional<std::pair<std::string, std::string>> reference_exponent(const EvaluationTarget& target) {
  const auto& L = target.algebra();
  if (L.name() == "metabelian") return std::make_pair("1", "c_n = n-1 for the metabelian algebra");
  std::vector<algebras::Element> basis;
  for (int i = 0; i < L.dim(); ++i) basis.push_back(L.table().basis_vector(i));
  // Lower central series.
  std::vector<algebras::Element> term = basis;
  for (int step = 0; step <= L.dim() && !term.empty(); ++step) {
    std::vector<algebras::Element> next;
    for (const auto& u : term) {
      for (const auto& b : basis) next.push_back(L.bracket(u, b));
    }
    term = span_of(next, L.dim());
  }
  if (term.empty()) return std::make_pair("0", "nilpotent: c_n = 0 for large n");
  std::vector<algebras::Element> derived;
  for (const auto& u : basis) {
    for (const auto& v : basis) derived.push_back(L.bracket(u, v));
  }
  if (static_cast<int>(span_of(derived, L.dim()).size()) == L.dim() && L.center_dim() == 0) {
    return std::make_pair(std::to_string(L.dim()),
                          target.is_envelope() ? "exp of G(L) = dim L for simple L" : "exp(L) = dim L for simple L");
  }
  return std::nullopt;
}

Report run_exponent(const RunConfig& config) {
  check_range(config);
  if (config.hook) {
    const auto [k, l] = *config.hook;
    if (k < 0 || l < 0 || k + l == 0) throw Error(ErrorKind::invalid_hook, "hook needs k + l >= 1");
    Report r;
    r.target = "hook " + hook_name(*config.hook);
    r.mode = "hook-trend";
    r.arithmetic = "exact";
    r.spanning = "-";
    r.seed = config.seed;
    for (int n = config.n_from; n <= config.n_to; ++n) {
      if (n < k * l || (n - k * l) % (k + l) != 0) continue;
      const int d = (n - k * l) / (k + l);
      report::Row row;
      row.n = n;
      row.c_n = partitions::dimension(partitions::hook_partition(k, l, d));
      r.rows.push_back(std::move(row));
      r.notes.emplace_back("h(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(d) + ")",
                           partitions::hook_partition(k, l, d).to_string() + " at n = " + std::to_string(n));
    }
    if (r.rows.empty()) throw Error(ErrorKind::usage, "no degree in range has the form kl + d(k+l)");
    fill_trend(r, false);
    r.notes.emplace_back("reference", "k+l = " + std::to_string(k + l));
    return r;
  }
  const auto target = make_target(config);
  check_degree_budget(config, target);
  const auto opts = engine_options(config);
  Report r = skeleton(config, target);
  r.mode = "exponent";
  for (int n = config.n_from; n <= config.n_to; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    QuotientModel model(target, VariableSet::untyped(n), opts);
    note_model(r, model);
    report::Row row;
    row.n = n;
    row.c_n = as_integer(model.dim());
    r.rows.push_back(std::move(row));
    r.timings.emplace_back(n, seconds_since(t0));
  }
  const bool centerless = target.algebra().center_dim() == 0;
  fill_trend(r, centerless);
  if (centerless) {
    std::string bad;
    for (const auto& row : r.rows) {
      if (row.monotonicity_violation) bad += (bad.empty() ? "n=" : ",") + std::to_string(row.n);
    }
    r.checks.push_back({"monotonicity", bad.empty(), bad.empty() ? "c_{n+1} >= c_n" : "decreasing at " + bad});
  }
  if (const auto ref = reference_exponent(target)) {
    r.notes.emplace_back("reference_exp", ref->first + " (" + ref->second + "; not asserted at small n)");
  } else {
    r.notes.emplace_back("reference_exp", "none known");
  }
  return r;
}

}  // namespace pilab::runner
