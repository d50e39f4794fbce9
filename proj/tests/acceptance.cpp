// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pilab/checks.hpp"
#include "pilab/common.hpp"
#include "pilab/envelope.hpp"
#include "pilab/report.hpp"
#include "pilab/runner.hpp"

using namespace pilab::codim;
using pilab::algebras::builtin;
namespace P = pilab::partitions;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& s) {
    if (pass) detail = s;
  }
};

EngineOptions exact() {
  EngineOptions o;
  o.arithmetic = Arithmetic::exact;
  return o;
}

struct Target {
  std::string label;
  EvaluationTarget target;
  int max_n;
};

std::vector<Target> criterion_targets() {
  return {{"metabelian", EvaluationTarget::plain(builtin("metabelian")), 6},
          {"abelian(3)", EvaluationTarget::plain(builtin("abelian3")), 6},
          {"sl2-cartan", EvaluationTarget::plain(builtin("sl2-cartan")), 6},
          {"G(metabelian)", EvaluationTarget::envelope(builtin("metabelian")), 5},
          {"G(sl2-cartan)", EvaluationTarget::envelope(builtin("sl2-cartan")), 5}};
}

std::string str(std::size_t v) { return std::to_string(v); }

Outcome c1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto t = EvaluationTarget::plain(builtin("metabelian"));
  std::string seq;
  for (int n = 2; n <= 8; ++n) {
    const auto c = codimension(t, n, exact());
    seq += (seq.empty() ? "" : ",") + str(c);
    if (c != static_cast<std::size_t>(n - 1)) o.fail("c_" + std::to_string(n) + " = " + str(c));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.2f s", secs);
  o.note("c_2..c_8 = " + seq + buf);
  return o;
}

Outcome c2() {
  Outcome o;
  int checked = 0;
  for (const auto& [label, t, max_n] : criterion_targets()) {
    for (int n = 1; n <= max_n; ++n) {
      const QuotientModel m(t, VariableSet::untyped(n), exact());
      try {
        const auto d = cocharacter(m);
        if (d.codimension() != Integer(static_cast<unsigned long>(m.dim()))) {
          o.fail(label + " n=" + std::to_string(n));
        }
      } catch (const pilab::Error& e) {
        o.fail(label + " n=" + std::to_string(n) + ": " + e.what());
      }
      ++checked;
    }
  }
  o.note(std::to_string(checked) + " (target, n) pairs, exact");
  return o;
}

Outcome c3() {
  Outcome o;
  const auto sl2 = builtin("sl2-cartan");
  const auto plain = EvaluationTarget::plain(sl2);
  const auto env = EvaluationTarget::envelope(sl2);
  for (int n = 1; n <= 6; ++n) {
    if (auto w = check_hook_constraint(cocharacter(plain, n), {3, 0})) {
      o.fail("sl2 n=" + std::to_string(n) + " has " + w->to_string() + " outside H(3,0)");
    }
    if (auto w = check_hook_constraint(cocharacter(env, n), {1, 2})) {
      o.fail("G(sl2) n=" + std::to_string(n) + " has " + w->to_string() + " outside H(1,2)");
    }
  }
  int pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int q = 0; q <= n; ++q) {
      ++pairs;
      if (auto w = check_hook_constraint(graded_cocharacter(env, q, n - q), {1, 0}, {0, 2})) {
        o.fail("G(sl2) (q,m)=(" + std::to_string(q) + "," + std::to_string(n - q) + ") has " +
               w->first.to_string() + "x" + w->second.to_string());
      }
    }
  }
  o.note("H(3,0) and H(1,2) for n<=6, (H(1,0),H(0,2)) on " + std::to_string(pairs) + " signatures");
  return o;
}

Outcome c4() {
  Outcome o;
  std::string summary;
  for (const char* name : {"metabelian", "sl2-cartan"}) {
    const auto t = check_tilde_identity_correspondence(builtin(name), 500, 6, 20240229);
    if (!t.pass()) o.fail(std::string(name) + ": " + *t.witness);
    if (t.trials != 500) o.fail(std::string(name) + ": only " + std::to_string(t.trials) + " trials");
    summary += std::string(summary.empty() ? "" : ", ") + name + " " + std::to_string(t.trials) + " trials (" +
               std::to_string(t.identities) + " identities)";
  }
  o.note(summary);
  return o;
}

Outcome c5() {
  Outcome o;
  int checked = 0;
  for (const char* name : {"metabelian", "sl2-cartan"}) {
    const auto L = builtin(name);
    for (int n = 1; n <= 5; ++n) {
      for (int q = 0; q <= n; ++q) {
        ++checked;
        if (auto w = check_conjugate_duality(L, q, n - q, exact())) {
          o.fail(std::string(name) + " m(" + w->lambda.to_string() + "," + w->mu.to_string() +
                 ") = " + w->plain.get_str() + " vs " + w->envelope.get_str());
        }
      }
    }
  }
  o.note(std::to_string(checked) + " signatures");
  return o;
}

Outcome c6() {
  Outcome o;
  int decomps = 0;
  for (const auto& [label, t, max_n] : criterion_targets()) {
    for (int n = 1; n <= 6; ++n) {
      const auto d = cocharacter(t, n);
      ++decomps;
      const auto s = check_sandwich(d);
      if (!s.pass) o.fail(label + " sandwich n=" + std::to_string(n));
      if (t.is_envelope()) {
        const auto b = check_colength_bound(d, t.algebra().even_dim(), t.algebra().odd_dim());
        if (!b.pass) o.fail(label + " colength n=" + std::to_string(n) + ": " + b.lhs.get_str());
      }
    }
    if (!t.algebra().is_graded()) continue;
    for (int n = 1; n <= 5; ++n) {
      const auto gr = graded_codimension(t, n);
      const auto c = codimension(t, n);
      if (gr < Integer(static_cast<unsigned long>(c))) {
        o.fail(label + " c_" + std::to_string(n) + "^gr = " + gr.get_str() + " < " + str(c));
      }
    }
  }
  o.note(std::to_string(decomps) + " decompositions, n<=6");
  return o;
}

Outcome c7() {
  Outcome o;
  // (a) spanning sets
  std::vector<std::pair<std::string, EvaluationTarget>> targets;
  for (const char* name : {"metabelian", "abelian3", "sl2-cartan", "heisenberg"}) {
    targets.emplace_back(name, EvaluationTarget::plain(builtin(name)));
  }
  for (const char* name : {"metabelian", "sl2-cartan", "heisenberg"}) {
    targets.emplace_back(std::string("G(") + name + ")", EvaluationTarget::envelope(builtin(name)));
  }
  targets.emplace_back("G3(sl2-cartan)", EvaluationTarget::plain(pilab::envelope::truncated_envelope_algebra(
                                              builtin("sl2-cartan"), 2)));
  int compared = 0;
  std::string mismatches;
  for (const auto& [label, t] : targets) {
    for (int n = 1; n <= 5; ++n) {
      std::vector<VariableSet> sigs{VariableSet::untyped(n)};
      if (t.algebra().is_graded()) {
        for (int q = 0; q <= n; ++q) sigs.push_back(VariableSet::typed(q, n - q));
      }
      for (const auto& vars : sigs) {
        EngineOptions a, b;
        a.spanning = SpanningKind::left_normed;
        b.spanning = SpanningKind::all_bracketings;
        const auto ln = QuotientModel(t, vars, a).dim();
        const auto ab = QuotientModel(t, vars, b).dim();
        ++compared;
        if (ln != ab) {
          const std::string where = vars.is_typed() ? "(q,m)=(" + std::to_string(vars.even_count()) + "," +
                                                          std::to_string(vars.odd_count()) + ")"
                                                    : "n=" + std::to_string(n);
          mismatches += (mismatches.empty() ? "" : ", ") + label + " " + where + " " + str(ln) + "/" + str(ab);
        }
      }
    }
  }
  if (!mismatches.empty()) o.fail("(a) left-normed/all-bracketings differ: " + mismatches);
  // (b) Koszul signs
  for (const char* name : {"metabelian", "sl2-cartan"}) {
    if (auto w = check_envelope_oracle(builtin(name), 1000, 6, 20240229)) o.fail(std::string("(b) ") + name + ": " + *w);
  }
  // (c) modular vs exact on every matrix computed in both
  int verified = 0;
  for (const auto& [label, t] : targets) {
    for (int n = 1; n <= 5; ++n) {
      EngineOptions v;
      v.arithmetic = Arithmetic::modular_verified;
      try {
        QuotientModel m(t, VariableSet::untyped(n), v);
        ++verified;
      } catch (const pilab::Error& e) {
        o.fail("(c) " + label + " n=" + std::to_string(n) + ": " + e.what());
      }
    }
  }
  o.note("(a) " + std::to_string(compared) + " rank pairs, (b) 2000 cases, (c) " + std::to_string(verified) +
         " verified matrices");
  return o;
}

Outcome c8() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : P::enumerate_partitions(n)) {
      for (const auto& m : P::enumerate_partitions(n)) {
        if (P::character_value(l, m) != oracle::character(l, m)) o.fail("chi" + l.to_string() + m.to_string());
      }
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const auto ps = P::enumerate_partitions(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        mpz_class s = 0;
        for (const auto& mu : ps) s += P::class_size(mu) * P::character_value(a, mu) * P::character_value(b, mu);
        if (s != (a == b ? P::factorial(n) : mpz_class(0))) o.fail("orthogonality " + a.to_string() + b.to_string());
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : P::enumerate_partitions(n)) {
      if (P::dimension(l) != oracle::count_syt(l)) o.fail("d" + l.to_string());
    }
  }
  int lr = 0;
  for (int a = 0; a <= 7; ++a) {
    for (int b = 0; a + b <= 7; ++b) {
      for (const auto& l : P::enumerate_partitions(a)) {
        for (const auto& m : P::enumerate_partitions(b)) {
          for (const auto& nu : P::enumerate_partitions(a + b)) {
            ++lr;
            if (mpz_class(static_cast<unsigned long>(P::lr_coefficient(l, m, nu))) !=
                oracle::lr_by_characters(l, m, nu)) {
              o.fail("c^" + nu.to_string() + "_" + l.to_string() + "," + m.to_string());
            }
          }
        }
      }
    }
  }
  int closure = 0;
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      for (int total = 0; total <= 8; ++total) {
        for (int a = 0; a <= total; ++a) {
          for (const auto& lam : P::enumerate_partitions(a)) {
            if (!P::in_hook(lam, {k, 0})) continue;
            for (const auto& mu : P::enumerate_partitions(total - a)) {
              if (!P::in_hook(mu, {0, l})) continue;
              for (const auto& nu : P::enumerate_partitions(total)) {
                ++closure;
                if (P::lr_coefficient(lam, mu, nu) != 0 && !P::in_hook(nu, {k, l})) {
                  o.fail("hook closure " + lam.to_string() + "," + mu.to_string() + " -> " + nu.to_string());
                }
              }
            }
          }
        }
      }
    }
  }
  o.note("MN n<=5, orthogonality n<=7, SYT n<=6, " + std::to_string(lr) + " LR coefficients, " +
         std::to_string(closure) + " hook-closure triples");
  return o;
}

Outcome c9() {
  Outcome o;
  const auto env = EvaluationTarget::envelope(builtin("sl2-cartan"));
  std::string seq;
  std::size_t prev = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto c = codimension(env, n);
    seq += (seq.empty() ? "" : ",") + str(c);
    if (n > 2 && c < prev) o.fail("c_" + std::to_string(n) + " < c_" + std::to_string(n - 1));
    prev = c;
  }
  pilab::runner::RunConfig h;
  h.hook = P::HookSpec{1, 1};
  h.n_from = h.n_to = 41;
  const auto hr = pilab::runner::run_exponent(h);
  double root = 0;
  if (hr.rows.size() != 1) {
    o.fail("hook trend produced no row at n=41");
  } else {
    root = std::stod(hr.rows[0].root);
    if (std::abs(root - 2.0) > 0.2) o.fail("hook root " + hr.rows[0].root + " not within 10% of 2");
  }
  pilab::runner::RunConfig e;
  e.algebra = "sl2-cartan";
  e.target = TargetKind::envelope;
  e.n_from = 1;
  e.n_to = 5;
  const auto table = pilab::report::to_table(pilab::runner::run_exponent(e));
  if (table.find("reference_exp: 3 ") == std::string::npos) o.fail("exponent report lacks the dim L = 3 line");
  o.note("c_2..c_6 = " + seq + ", hook root at n=41 = " + (hr.rows.empty() ? "-" : hr.rows[0].root) +
         ", reference line 3 printed");
  return o;
}

std::string full_suite_json() {
  std::string out;
  pilab::runner::RunConfig c;
  c.seed = 12345;
  c.trials = 200;
  for (const char* name : {"metabelian", "sl2-cartan"}) {
    c.algebra = name;
    for (auto kind : {TargetKind::algebra, TargetKind::envelope}) {
      c.target = kind;
      c.graded = true;
      c.n_from = 1;
      c.n_to = 5;
      c.arithmetic = Arithmetic::automatic;
      out += pilab::report::to_json(pilab::runner::run_codim(c));
      c.n_to = 6;
      c.arithmetic = Arithmetic::modular;
      out += pilab::report::to_json(pilab::runner::run_exponent(c));
      c.n_to = 4;
      c.arithmetic = Arithmetic::automatic;
      for (const auto& suite : pilab::runner::suite_names()) {
        out += pilab::report::to_json(pilab::runner::run_check(c, suite));
      }
    }
  }
  return out;
}

Outcome c10() {
  Outcome o;
  const auto a = full_suite_json();
  const auto b = full_suite_json();
  if (a != b) o.fail("JSON differs between runs");
  o.note(std::to_string(a.size()) + " bytes identical across two runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 metabelian codimensions", c1},  {"2 cocharacter degree equals rank", c2},
      {"3 hook constraints", c3},         {"4 tilde correspondence", c4},
      {"5 conjugate duality", c5},        {"6 bounds", c6},
      {"7 oracle equivalences", c7},      {"8 character machinery", c8},
      {"9 growth trends", c9},            {"10 determinism", c10}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("error: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
