#include <doctest.h>

#include "pilab/checks.hpp"
#include "pilab/common.hpp"
#include "pilab/report.hpp"
#include "pilab/runner.hpp"

using namespace pilab::codim;
using pilab::algebras::builtin;
using pilab::partitions::Partition;

TEST_SUITE("checks") {

TEST_CASE("hook constraint witnesses") {
  Cocharacter d;
  d.n = 4;
  d.entries = {{Partition{3, 1}, 1}, {Partition{2, 1, 1}, 2}};
  CHECK_FALSE(check_hook_constraint(d, {3, 0}));
  CHECK(check_hook_constraint(d, {2, 0}) == Partition{2, 1, 1});
  CHECK_FALSE(check_hook_constraint(d, {1, 1}));
  d.entries.push_back({Partition{2, 2}, 0});
  CHECK_FALSE(check_hook_constraint(d, {1, 1}));
}

TEST_CASE("bounds") {
  CHECK(colength_bound(1, 2, 3) == Integer(3) * 16 * Integer(2187));
  Cocharacter d;
  d.n = 4;
  d.entries = {{Partition{3, 1}, 3}, {Partition{2, 2}, 2}};
  const auto s = check_sandwich(d);
  CHECK(s.pass);
  CHECK(s.lhs == 3);
  CHECK(s.rhs == 15);
  CHECK(check_colength_bound(d, 1, 2).pass);
  CHECK(check_colength_bound(Cocharacter{5, {}}, 0, 0).pass);
}

TEST_CASE("exponent report") {
  const auto rows = exponent_report({{2, 4}, {3, 8}, {4, 6}}, true);
  CHECK(rows[0].root == "2.000000");
  CHECK(rows[0].ratio.empty());
  CHECK(rows[1].ratio == "2.000000");
  CHECK(rows[2].monotonicity_violation);
  CHECK_FALSE(exponent_report({{2, 4}, {3, 2}}, false)[1].monotonicity_violation);
  CHECK(format_root(0, 5) == "0.000000");
}

TEST_CASE("hooks and duality at small degree") {
  const auto sl2 = builtin("sl2-cartan");
  const auto env = EvaluationTarget::envelope(sl2);
  for (int n = 1; n <= 5; ++n) {
    CHECK_FALSE(check_hook_constraint(cocharacter(EvaluationTarget::plain(sl2), n), {3, 0}));
    CHECK_FALSE(check_hook_constraint(cocharacter(env, n), {1, 2}));
    for (int q = 0; q <= n; ++q) {
      CHECK_FALSE(check_hook_constraint(graded_cocharacter(env, q, n - q), {1, 0}, {0, 2}));
      CHECK_FALSE(check_conjugate_duality(sl2, q, n - q));
    }
  }
}

TEST_CASE("tilde correspondence") {
  const auto t = check_tilde_identity_correspondence(builtin("metabelian"), 150, 5, 7);
  CHECK(t.pass());
  CHECK(t.trials == 150);
  CHECK(t.identities > 0);
  CHECK(t.identities < t.trials);
}

TEST_CASE("runner reports are deterministic") {
  pilab::runner::RunConfig c;
  c.algebra = "sl2-cartan";
  c.target = TargetKind::envelope;
  c.graded = true;
  c.n_from = 1;
  c.n_to = 5;
  c.arithmetic = Arithmetic::modular;
  const auto a = pilab::report::to_json(pilab::runner::run_codim(c));
  c.policy = pilab::ExecPolicy::serial;
  const auto b = pilab::report::to_json(pilab::runner::run_codim(c));
  CHECK(a == b);
  CHECK(a.find("\"prime\"") != std::string::npos);
  CHECK(a.find("\"c_n\": \"68\"") != std::string::npos);
}

TEST_CASE("runner errors") {
  pilab::runner::RunConfig c;
  c.n_from = 2;
  c.n_to = 9;
  CHECK_THROWS_AS(pilab::runner::run_codim(c), pilab::Error);
  c.n_to = 3;
  CHECK_THROWS_AS(pilab::runner::run_check(c, "nope"), pilab::Error);
  c.n_from = 4;
  CHECK_THROWS_AS(pilab::runner::run_codim(c), pilab::Error);
  c.n_from = 2;
  c.algebra = "abelian2";
  c.graded = true;
  CHECK_THROWS_AS(pilab::runner::run_codim(c), pilab::Error);
}

TEST_CASE("reference exponents") {
  using pilab::runner::reference_exponent;
  CHECK(reference_exponent(EvaluationTarget::plain(builtin("metabelian")))->first == "1");
  CHECK(reference_exponent(EvaluationTarget::plain(builtin("heisenberg")))->first == "0");
  CHECK(reference_exponent(EvaluationTarget::plain(builtin("abelian3")))->first == "0");
  CHECK(reference_exponent(EvaluationTarget::envelope(builtin("sl2-cartan")))->first == "3");
}

}  // TEST_SUITE
