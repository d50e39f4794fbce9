#include <doctest.h>

#include "pilab/checks.hpp"
#include "pilab/common.hpp"
#include "pilab/runner.hpp"

using namespace pilab::codim;
using pilab::algebras::builtin;
using pilab::partitions::Partition;

namespace {

EngineOptions exact_serial() {
  EngineOptions o;
  o.arithmetic = Arithmetic::exact;
  o.policy = pilab::ExecPolicy::serial;
  return o;
}

std::vector<std::size_t> codims(const EvaluationTarget& t, int to, const EngineOptions& o = {}) {
  std::vector<std::size_t> out;
  for (int n = 1; n <= to; ++n) out.push_back(codimension(t, n, o));
  return out;
}

}  // namespace

TEST_SUITE("codim") {

TEST_CASE("metabelian evaluation matrix") {
  const auto t = EvaluationTarget::plain(builtin("metabelian"));
  const auto m = evaluation_matrix(t, VariableSet::untyped(2), SpanningKind::left_normed);
  CHECK(m.matrix.rows() == 2);
  CHECK(m.matrix.cols() == 8);
  CHECK(pilab::exactlin::rank(m.matrix) == 1);
}

TEST_CASE("sl2 evaluation matrix") {
  const auto t = EvaluationTarget::plain(builtin("sl2-cartan"));
  const auto m = evaluation_matrix(t, VariableSet::untyped(3), SpanningKind::left_normed);
  CHECK(m.matrix.rows() == 6);
  CHECK(m.matrix.cols() == 81);
  CHECK(pilab::exactlin::rank(m.matrix) == 2);
}

TEST_CASE("metabelian codimensions are n-1") {
  const auto t = EvaluationTarget::plain(builtin("metabelian"));
  const auto c = codims(t, 8);
  CHECK(c[0] == 1);
  for (int n = 2; n <= 8; ++n) CHECK(c[static_cast<std::size_t>(n - 1)] == static_cast<std::size_t>(n - 1));
  CHECK(trace_on_quotient(t, 2, pilab::freealg::Permutation({1, 0}), exact_serial()) == -1);
  const auto d = cocharacter(t, 2);
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].first == Partition{1, 1});
  CHECK(d.entries[0].second == 1);
  // (n-1, 1) with multiplicity one
  const auto d6 = cocharacter(t, 6);
  REQUIRE(d6.entries.size() == 1);
  CHECK(d6.entries[0].first == Partition{5, 1});
}

TEST_CASE("small known sequences") {
  CHECK(codims(EvaluationTarget::plain(builtin("abelian3")), 5) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(codims(EvaluationTarget::plain(builtin("heisenberg")), 5) == std::vector<std::size_t>{1, 1, 0, 0, 0});
  // sl2 has no identity below degree 5, so c_n = (n-1)! up to n = 4
  const auto sl2 = codims(EvaluationTarget::plain(builtin("sl2-cartan")), 6);
  CHECK(sl2 == std::vector<std::size_t>{1, 1, 2, 6, 14, 36});
  CHECK(codims(EvaluationTarget::plain(builtin("sl2-trivial")), 6) == sl2);
}

TEST_CASE("envelope codimensions") {
  // frozen from the all-bracketings engine, cross-checked by dense Bareiss below
  CHECK(codims(EvaluationTarget::envelope(builtin("sl2-cartan")), 6) ==
        std::vector<std::size_t>{1, 2, 7, 23, 68, 194});
  CHECK(codims(EvaluationTarget::envelope(builtin("metabelian")), 6) ==
        std::vector<std::size_t>{1, 1, 2, 3, 4, 5});
  // with the trivial grading the envelope is L tensor a commutative algebra
  CHECK(codims(EvaluationTarget::envelope(builtin("sl2-trivial")), 5) ==
        codims(EvaluationTarget::plain(builtin("sl2-trivial")), 5));
}

TEST_CASE("engine rank equals dense Bareiss rank") {
  for (const char* name : {"metabelian", "sl2-cartan", "heisenberg"}) {
    for (bool env : {false, true}) {
      const auto L = builtin(name);
      const auto t = env ? EvaluationTarget::envelope(L) : EvaluationTarget::plain(L);
      for (int n = 1; n <= 4; ++n) {
        std::vector<VariableSet> sigs{VariableSet::untyped(n)};
        for (int q = 0; q <= n; ++q) sigs.push_back(VariableSet::typed(q, n - q));
        for (const auto& vars : sigs) {
          for (auto kind : {SpanningKind::left_normed, SpanningKind::all_bracketings}) {
            EngineOptions o = exact_serial();
            o.spanning = kind;
            CAPTURE(name);
            CAPTURE(env);
            CAPTURE(n);
            CHECK(QuotientModel(t, vars, o).dim() == reference_codimension(t, vars, kind));
          }
        }
      }
    }
  }
}

TEST_CASE("graded parts") {
  const auto sl2 = builtin("sl2-cartan");
  const auto p = EvaluationTarget::plain(sl2);
  const auto e = EvaluationTarget::envelope(sl2);
  // (q,m) = (2,0): x1, x2 both in the Cartan part, which is abelian
  CHECK(graded_codimension_part(p, 2, 0) == 0);
  CHECK(graded_codimension_part(p, 1, 1) == 1);
  CHECK(graded_codimension_part(p, 0, 2) == 1);
  CHECK(graded_codimension_part(e, 0, 2) == 1);
  CHECK(graded_codimension(e, 2) == 3);
  CHECK_THROWS_AS(graded_codimension_part(p, 0, 0), pilab::Error);
  CHECK_THROWS_AS(graded_codimension_part(EvaluationTarget::plain(builtin("abelian2")), 1, 1), pilab::Error);
  const auto g = graded_cocharacter(p, 1, 2);
  CHECK(g.codimension() == graded_codimension_part(p, 1, 2));
}

TEST_CASE("cocharacter degree equals rank") {
  for (const char* name : {"metabelian", "sl2-cartan", "heisenberg"}) {
    for (bool env : {false, true}) {
      const auto L = builtin(name);
      const auto t = env ? EvaluationTarget::envelope(L) : EvaluationTarget::plain(L);
      for (int n = 1; n <= 5; ++n) {
        const QuotientModel model(t, VariableSet::untyped(n));
        CHECK(cocharacter(model).codimension() == model.dim());
        for (int q = 0; q <= n; ++q) {
          const QuotientModel typed(t, VariableSet::typed(q, n - q));
          CHECK(graded_cocharacter(typed).codimension() == typed.dim());
        }
      }
    }
  }
}

TEST_CASE("serial and parallel agree exactly") {
  for (auto arith : {Arithmetic::exact, Arithmetic::modular}) {
    EngineOptions s, p;
    s.arithmetic = p.arithmetic = arith;
    s.policy = pilab::ExecPolicy::serial;
    p.policy = pilab::ExecPolicy::parallel;
    const auto t = EvaluationTarget::envelope(builtin("sl2-cartan"));
    for (int n = 3; n <= 5; ++n) {
      const QuotientModel a(t, VariableSet::untyped(n), s), b(t, VariableSet::untyped(n), p);
      CHECK(a.basis() == b.basis());
      CHECK(a.prime() == b.prime());
      std::vector<pilab::freealg::Permutation> reps;
      for (const auto& mu : pilab::partitions::enumerate_partitions(n)) {
        reps.push_back(pilab::freealg::Permutation::from_cycle_type(mu));
      }
      CHECK(a.traces(reps) == b.traces(reps));
    }
  }
}

TEST_CASE("modular and exact agree") {
  EngineOptions o;
  o.arithmetic = Arithmetic::modular_verified;
  const auto t = EvaluationTarget::plain(builtin("sl2-cartan"));
  const QuotientModel m(t, VariableSet::untyped(5), o);
  CHECK(m.verified());
  CHECK(m.prime().has_value());
  CHECK(m.dim() == 14);
  EngineOptions other = o;
  other.arithmetic = Arithmetic::modular;
  other.seed = 99;
  const QuotientModel m2(t, VariableSet::untyped(6), other);
  CHECK(m2.prime() != m.prime());
  CHECK(m2.dim() == 36);
}

TEST_CASE("identities from the quotient vanish") {
  EngineOptions o = exact_serial();
  o.spanning = SpanningKind::all_bracketings;
  const auto t = EvaluationTarget::plain(builtin("sl2-cartan"));
  const QuotientModel m(t, VariableSet::untyped(5), o);
  const auto all = pilab::freealg::generate_spanning_set(SpanningKind::all_bracketings, VariableSet::untyped(5));
  for (std::size_t i = 0; i < all.size(); i += 97) {
    const auto f = m.identity_from(all[i]);
    CHECK(m.evaluator().annihilates(f));
  }
  CHECK_FALSE(m.evaluator().annihilates(Polynomial(VariableSet::untyped(5), all[0])));
}

TEST_CASE("budget and grading errors") {
  EngineOptions o;
  o.budget_bytes = 1;
  try {
    QuotientModel(EvaluationTarget::plain(builtin("sl2-cartan")), VariableSet::untyped(5), o);
    FAIL("expected budget error");
  } catch (const pilab::Error& e) {
    CHECK(e.kind() == pilab::ErrorKind::budget_exceeded);
  }
  CHECK_THROWS_AS(EvaluationTarget::envelope(builtin("abelian2")), pilab::Error);
}

}  // TEST_SUITE
