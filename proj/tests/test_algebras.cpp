#include <doctest.h>

#include <string>

#include "pilab/algebras.hpp"
#include "pilab/common.hpp"

using namespace pilab::algebras;

namespace {

pilab::ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const pilab::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return pilab::ErrorKind::usage;
}

}  // namespace

TEST_SUITE("algebras") {

TEST_CASE("builtins") {
  const auto sl2 = builtin("sl2-cartan");
  CHECK(sl2.dim() == 3);
  CHECK(sl2.even_dim() == 1);
  CHECK(sl2.odd_dim() == 2);
  CHECK(sl2.center_dim() == 0);
  CHECK_FALSE(validate_lie(sl2.table()));
  CHECK_FALSE(check_grading(sl2.table(), *sl2.grading()));
  // [e,f] = h
  CHECK(sl2.bracket(sl2.table().basis_vector(0), sl2.table().basis_vector(2)) == sl2.table().basis_vector(1));

  const auto meta = builtin("metabelian");
  CHECK(meta.dim() == 2);
  CHECK(meta.center_dim() == 0);
  CHECK(builtin("heisenberg").center_dim() == 1);
  const auto ab = builtin("abelian3");
  CHECK(ab.name() == "abelian(3)");
  CHECK(ab.center_dim() == 3);
  CHECK_FALSE(ab.is_graded());
  CHECK(builtin("abelian(5)").dim() == 5);
  CHECK(kind_of([] { builtin("sl3"); }) == pilab::ErrorKind::unknown_builtin);
  CHECK(kind_of([] { builtin("abelian0"); }) == pilab::ErrorKind::unknown_builtin);
}

TEST_CASE("validators find witnesses") {
  StructureConstants t(2);
  t.at(0, 1, 0) = 1;  // [b1,b2] = b1 but [b2,b1] = 0
  const auto w = validate_lie(t);
  REQUIRE(w);
  CHECK(w->to_string().find("fails") != std::string::npos);

  StructureConstants sq(1);
  sq.at(0, 0, 0) = 1;
  const auto ws = validate_lie(sq);
  REQUIRE(ws);
  CHECK(ws->i == 0);
  CHECK(ws->j == 0);

  // anticommutative but not Jacobi: [b1,b2]=b3, [b1,b3]=b1
  StructureConstants nj(3);
  nj.at(0, 1, 2) = 1;
  nj.at(1, 0, 2) = -1;
  nj.at(0, 2, 0) = 1;
  nj.at(2, 0, 0) = -1;
  const auto wj = validate_lie(nj);
  REQUIRE(wj);
  CHECK(wj->identity.find("Jacobi") != std::string::npos);
  CHECK(kind_of([&] { AlgebraSpec("x", {"a", "b", "c"}, nj, std::nullopt, AlgebraClass::lie); }) ==
        pilab::ErrorKind::invalid_algebra);
  CHECK_NOTHROW(AlgebraSpec("x", {"a", "b", "c"}, nj, std::nullopt, AlgebraClass::nonassociative));
}

TEST_CASE("gradings") {
  const auto sl2 = builtin("sl2-cartan");
  CHECK(check_grading(sl2.table(), {0, 1, 0}));
  CHECK(kind_of([&] { AlgebraSpec("x", {"e", "h", "f"}, sl2.table(), std::vector<int>{0, 0, 1}, AlgebraClass::lie); }) ==
        pilab::ErrorKind::invalid_algebra);
  CHECK(kind_of([&] { AlgebraSpec("x", {"e", "h", "f"}, sl2.table(), std::nullopt, AlgebraClass::super_lie); }) ==
        pilab::ErrorKind::grading_required);
}

TEST_CASE("super Lie validation") {
  // one odd element y with [y,y] = z even and central: a Lie superalgebra
  StructureConstants t(2);
  t.at(0, 0, 1) = 1;
  CHECK_FALSE(validate_super_lie(t, {1, 0}));
  // as an ordinary algebra [y,y] != 0 is not allowed
  CHECK(validate_lie(t));
  // odd-odd bracket must be symmetric
  StructureConstants bad(3);
  bad.at(0, 1, 2) = 1;
  bad.at(1, 0, 2) = -1;
  CHECK(validate_super_lie(bad, {1, 1, 0}));
  CHECK(kind_of([&] { validate_super_lie(t, {}); }) == pilab::ErrorKind::grading_required);
}

TEST_CASE("JSON round trip") {
  const auto sl2 = builtin("sl2-cartan");
  const auto back = parse_algebra_json(to_json(sl2), "sl2-cartan");
  CHECK(back.table() == sl2.table());
  CHECK(back.grading() == sl2.grading());
  CHECK(back.basis_names() == sl2.basis_names());

  const auto a = parse_algebra_json(R"({"dim": 2, "grading": [0, 1], "class": "lie",
    "table": [[[0, 0], [0, "1/2"]], [[0, "-1/2"], [0, 0]]]})");
  CHECK(a.basis_names() == std::vector<std::string>{"b1", "b2"});
  CHECK(a.table().at(0, 1, 1) == Rational(1, 2));
}

TEST_CASE("JSON errors carry positions") {
  try {
    parse_algebra_json("{\n  \"dim\": 2,\n  \"table\": [ oops ]\n}", "broken.json");
    FAIL("expected parse error");
  } catch (const pilab::Error& e) {
    CHECK(e.kind() == pilab::ErrorKind::parse_error);
    CHECK(std::string(e.what()).starts_with("broken.json:3:"));
  }
  CHECK(kind_of([] { parse_algebra_json(R"({"dim": 2, "table": [[[0,0],[0,1]]]})"); }) ==
        pilab::ErrorKind::invalid_algebra);
  CHECK(kind_of([] { parse_algebra_json(R"({"dim": 1, "table": [[["x"]]]})"); }) ==
        pilab::ErrorKind::invalid_algebra);
  CHECK(kind_of([] { load_algebra("/nonexistent/file.json"); }) == pilab::ErrorKind::usage);
}

}  // TEST_SUITE
