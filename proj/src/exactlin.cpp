#include "pilab/exactlin.hpp"

#include <random>

namespace pilab::exactlin {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime_u64(p)) {
    throw Error(ErrorKind::usage, "PrimeField: " + std::to_string(p) +
                                      " is not a prime below 2^63");
  }
}

PrimeField PrimeField::random_62bit(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t candidate = (rng() >> 2) | (1ULL << 61) | 1ULL;
  while (!is_prime_u64(candidate)) {
    candidate += 2;
    if (candidate >= (1ULL << 62)) candidate = (1ULL << 61) | 1ULL;
  }
  return PrimeField(candidate);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorKind::internal_inconsistency, "inverse of 0 mod p");
  return powmod(a, p_ - 2, p_);
}

PrimeField::value_type PrimeField::from_integer(const Integer& a) const {
  return mpz_fdiv_ui(a.get_mpz_t(), p_);
}

PrimeField::value_type PrimeField::from_int(std::int64_t a) const {
  if (a >= 0) return static_cast<std::uint64_t>(a) % p_;
  const std::uint64_t m = (0 - static_cast<std::uint64_t>(a)) % p_;
  return m == 0 ? 0 : p_ - m;
}

PrimeField::value_type PrimeField::from_rational(const Rational& a) const {
  const value_type den = from_integer(a.get_den());
  if (den == 0) {
    throw Error(ErrorKind::internal_inconsistency,
                "denominator divisible by the working prime");
  }
  return mul(from_integer(a.get_num()), inv(den));
}

Integer PrimeField::lift_symmetric(value_type a) const {
  Integer r(static_cast<unsigned long>(a));
  if (a > p_ / 2) r -= Integer(static_cast<unsigned long>(p_));
  return r;
}

DenseMatrix<std::uint64_t> reduce_mod(const DenseMatrix<Rational>& m,
                                      const PrimeField& field) {
  DenseMatrix<std::uint64_t> out(m.rows(), m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = field.from_rational(m(r, c));
  }
  return out;
}

namespace {

DenseMatrix<Integer> clear_denominators(const DenseMatrix<Rational>& m) {
  DenseMatrix<Integer> out(m.rows(), m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const DenseMatrix<Rational>& m) {
  DenseMatrix<Integer> a = clear_denominators(m);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  Integer t1, t2;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a(piv, col)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(piv, c), a(rank, c));
    }
    const Integer& p = a(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        t1 = p * a(i, j);
        t2 = a(i, col) * a(rank, j);
        t1 -= t2;
        mpz_divexact(a(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank(const DenseMatrix<std::uint64_t>& m, const PrimeField& field) {
  Echelon<PrimeField> ech(field, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    ech.insert({row.begin(), row.end()});
  }
  return ech.rank();
}

std::vector<std::size_t> image_basis(const DenseMatrix<Rational>& m) {
  DenseMatrix<Integer> a = clear_denominators(m);
  IntegerEchelon ech(a.cols());
  std::vector<std::size_t> basis;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    if (ech.insert({row.begin(), row.end()})) basis.push_back(r);
  }
  return basis;
}

std::vector<std::size_t> image_basis(const DenseMatrix<std::uint64_t>& m,
                                     const PrimeField& field) {
  Echelon<PrimeField> ech(field, m.cols());
  std::vector<std::size_t> basis;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (ech.insert({row.begin(), row.end()})) basis.push_back(r);
  }
  return basis;
}

bool normalize_content(std::vector<Integer>& row) {
  Integer g = 0;
  std::size_t lead = row.size();
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (sgn(row[c]) == 0) continue;
    if (lead == row.size()) lead = c;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[c].get_mpz_t());
    if (g == 1) break;
  }
  if (lead == row.size()) return false;
  if (sgn(row[lead]) < 0) g = -g;
  if (g != 1) {
    for (auto& x : row) {
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return true;
}

void IntegerEchelon::reduce(Row& row, std::size_t from) const {
  Integer a, b, g, t;
  for (std::size_t i = from; i < pivots_.size(); ++i) {
    const std::size_t pc = pivot_cols_[i];
    if (sgn(row[pc]) == 0) continue;
    const Row& p = pivots_[i];
    mpz_gcd(g.get_mpz_t(), p[pc].get_mpz_t(), row[pc].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), p[pc].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), row[pc].get_mpz_t(), g.get_mpz_t());
    // row <- a*row - b*p; p has zeros at earlier pivot columns only, so the
    // scaling must touch the whole row.
    if (a != 1) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(row[c]) != 0) row[c] *= a;
      }
    }
    for (std::size_t c = pc; c < cols_; ++c) {
      if (sgn(p[c]) != 0) {
        mpz_mul(t.get_mpz_t(), b.get_mpz_t(), p[c].get_mpz_t());
        row[c] -= t;
      }
    }
    if (a != 1) normalize_content(row);
  }
}

void IntegerEchelon::reduce_batch(std::span<Row> rows, ExecPolicy policy) const {
  const auto n = static_cast<std::int64_t>(rows.size());
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) reduce(rows[static_cast<std::size_t>(i)]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) reduce(rows[static_cast<std::size_t>(i)]);
  }
}

bool IntegerEchelon::insert_reduced(Row row) {
  if (!normalize_content(row)) return false;
  std::size_t pc = 0;
  while (sgn(row[pc]) == 0) ++pc;
  pivots_.push_back(std::move(row));
  pivot_cols_.push_back(pc);
  return true;
}

std::optional<std::vector<Rational>> solve_in_span(const DenseMatrix<Rational>& basis,
                                                   std::span<const Rational> v) {
  return SpanSolver<RationalField>(RationalField{}, basis).solve(v);
}

}  // namespace pilab::exactlin
