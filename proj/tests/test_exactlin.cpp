#include <doctest.h>

#include <random>

#include "pilab/exactlin.hpp"

using namespace pilab::exactlin;

namespace {

// B (rows x r) times C (r x cols) with small random entries.
DenseMatrix<Rational> low_rank(std::size_t rows, std::size_t cols, std::size_t r, std::mt19937_64& rng) {
  DenseMatrix<Rational> b(rows, r), c(r, cols), out(rows, cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < r; ++k) b(i, k) = static_cast<long>(rng() % 7) - 3;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < cols; ++j) {
      c(k, j) = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      c(k, j).canonicalize();
    }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < r; ++k) out(i, j) += b(i, k) * c(k, j);
  return out;
}

}  // namespace

TEST_SUITE("exactlin") {

TEST_CASE("prime field basics") {
  const PrimeField f(1000000007ULL);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.from_int(-1) == 1000000006ULL);
  CHECK(f.lift_symmetric(f.from_int(-5)) == -5);
  CHECK(f.from_rational(Rational(1, 2)) == f.inv(2));
  CHECK_THROWS(PrimeField(15));
  const auto p = PrimeField::random_62bit(7);
  CHECK(is_prime_u64(p.prime()));
  CHECK(p.prime() >= (1ULL << 61));
  CHECK(p.prime() < (1ULL << 62));
  CHECK(PrimeField::random_62bit(7).prime() == p.prime());
}

TEST_CASE("known ranks") {
  DenseMatrix<Rational> m(3, 3);
  int v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v++;
  CHECK(rank(m) == 2);
  CHECK(rank(DenseMatrix<Rational>(4, 5, 0)) == 0);
  CHECK(rank(DenseMatrix<Rational>::identity(5, 1, 0)) == 5);
  CHECK(rank(DenseMatrix<Rational>(0, 3)) == 0);
}

TEST_CASE("rational, modular and echelon ranks agree") {
  std::mt19937_64 rng(11);
  const auto field = PrimeField::random_62bit(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9, r = rng() % 6;
    const auto m = low_rank(rows, cols, r, rng);
    const auto expected = rank(m);
    CHECK(expected <= std::min({rows, cols, r}));
    CHECK(rank(reduce_mod(m, field), field) == expected);
    CHECK(image_basis(m).size() == expected);
    CHECK(image_basis(m) == image_basis(reduce_mod(m, field), field));

    Echelon<RationalField> ech(RationalField{}, cols);
    IntegerEchelon iech(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      auto row = m.row(i);
      ech.insert({row.begin(), row.end()});
      // clear denominators for the integer version
      Integer lcm = 1;
      for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      std::vector<Integer> irow;
      for (const auto& x : row) irow.push_back(Integer(x * lcm));
      iech.insert(irow);
    }
    CHECK(ech.rank() == expected);
    CHECK(iech.rank() == expected);
    CHECK(iech.pivot_columns() == ech.pivot_columns());
  }
}

TEST_CASE("batch reduction matches one-at-a-time") {
  std::mt19937_64 rng(5);
  const auto m = low_rank(30, 12, 7, rng);
  const PrimeField f(1000000007ULL);
  const auto mm = reduce_mod(m, f);
  Echelon<PrimeField> base(f, 12);
  for (std::size_t i = 0; i < 4; ++i) base.insert({mm.row(i).begin(), mm.row(i).end()});
  std::vector<Echelon<PrimeField>::Row> a, b;
  for (std::size_t i = 4; i < 30; ++i) a.emplace_back(mm.row(i).begin(), mm.row(i).end());
  b = a;
  base.reduce_batch(a, pilab::ExecPolicy::parallel);
  for (auto& row : b) base.reduce(row);
  CHECK(a == b);
}

TEST_CASE("inverse and span solving") {
  std::mt19937_64 rng(9);
  const RationalField q;
  int solved = 0;
  for (int t = 0; t < 20; ++t) {
    const auto m = low_rank(5, 5, 5, rng);
    const auto inv = invert(q, m);
    if (rank(m) < 5) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < 5; ++k) s += m(i, k) * (*inv)(k, j);
        CHECK(s == (i == j ? 1 : 0));
      }

    // round trip: v = c B is recovered; a vector off the span is rejected
    DenseMatrix<Rational> basis(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) basis(i, j) = m(i, j);
    std::vector<Rational> c{Rational(2, 3), -1, 5}, v(5, 0);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) v[j] += c[i] * basis(i, j);
    const auto got = solve_in_span(basis, v);
    REQUIRE(got.has_value());
    CHECK(*got == c);
    std::vector<Rational> off(m.row(4).begin(), m.row(4).end());
    CHECK_FALSE(solve_in_span(basis, off).has_value());
    ++solved;
  }
  CHECK(solved > 0);
}

TEST_CASE("dependent basis is rejected") {
  DenseMatrix<Rational> b(2, 3, 1);
  std::vector<Rational> v(3, 1);
  CHECK_THROWS_AS(solve_in_span(b, v), pilab::Error);
}

}  // TEST_SUITE
