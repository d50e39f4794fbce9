// Brute-force reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the code it is used to check,
// except where noted.
#ifndef PILAB_TESTS_ORACLES_HPP
#define PILAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "pilab/freealg.hpp"
#include "pilab/partitions.hpp"

namespace oracle {

using pilab::partitions::Partition;

// Standard Young tableaux by removing the cell holding n, one corner at a time.
inline mpz_class count_syt(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  mpz_class total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[i];
    total += count_syt(smaller);
  }
  return total;
}

inline mpz_class count_syt(const Partition& p) { return count_syt(std::vector<int>(p.parts().begin(), p.parts().end())); }

inline std::vector<int> cycle_lengths(const Partition& mu) { return {mu.parts().begin(), mu.parts().end()}; }

// Permutation character of S_n on tabloids of row lengths alpha (a composition,
// zero and negative entries allowed): ways to colour the cycles of mu so that
// colour i covers exactly alpha_i points.
inline mpz_class tabloid_character(const std::vector<int>& alpha, const std::vector<int>& cycles) {
  for (int a : alpha) {
    if (a < 0) return 0;
  }
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != std::accumulate(cycles.begin(), cycles.end(), 0)) return 0;
  std::vector<int> room = alpha;
  mpz_class count = 0;
  auto place = [&](auto&& self, std::size_t c) -> void {
    if (c == cycles.size()) {
      ++count;
      return;
    }
    for (auto& r : room) {
      if (r >= cycles[c]) {
        r -= cycles[c];
        self(self, c + 1);
        r += cycles[c];
      }
    }
  };
  place(place, 0);
  return count;
}

// chi_lambda(mu) from the Jacobi-Trudi determinant, expanded over S_l.
inline mpz_class character(const Partition& lambda, const Partition& mu) {
  const int l = lambda.length();
  if (l == 0) return 1;
  std::vector<int> w(static_cast<std::size_t>(l));
  std::iota(w.begin(), w.end(), 0);
  mpz_class total = 0;
  const auto cycles = cycle_lengths(mu);
  do {
    std::vector<int> alpha;
    for (int i = 0; i < l; ++i) alpha.push_back(lambda.part(i) - i + w[static_cast<std::size_t>(i)]);
    total += pilab::freealg::sequence_sign(w) * tabloid_character(alpha, cycles);
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

// Size of the class of cycle type mu, by counting all permutations of S_n.
inline mpz_class brute_class_size(const Partition& mu) {
  const int n = mu.size();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  mpz_class count = 0;
  do {
    if (pilab::freealg::Permutation(p).cycle_type() == mu) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// c^nu_{lambda,mu} as <Res chi_nu, chi_lambda x chi_mu> over S_a x S_b.
// Uses the library characters, which are checked against character() above.
inline mpz_class lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
  namespace P = pilab::partitions;
  mpq_class sum = 0;
  for (const auto& a : P::enumerate_partitions(lambda.size())) {
    for (const auto& b : P::enumerate_partitions(mu.size())) {
      std::vector<int> joined = cycle_lengths(a);
      joined.insert(joined.end(), b.parts().begin(), b.parts().end());
      std::sort(joined.begin(), joined.end(), std::greater<>());
      sum += mpq_class(P::class_size(a) * P::class_size(b) * P::character_value(nu, Partition(joined)) *
                       P::character_value(lambda, a) * P::character_value(mu, b));
    }
  }
  sum /= mpq_class(P::factorial(lambda.size()) * P::factorial(mu.size()));
  return sum.get_num();
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, max); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace oracle

#endif  // PILAB_TESTS_ORACLES_HPP
