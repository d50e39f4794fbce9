#ifndef PILAB_CHECKS_HPP
#define PILAB_CHECKS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pilab/codim.hpp"

namespace pilab::codim {

/// First partition with nonzero multiplicity outside H(k,l), if any.
std::optional<Partition> check_hook_constraint(const Cocharacter& d, partitions::HookSpec hook);

/// First pair with nonzero multiplicity where lambda is outside
/// `lambda_hook` or mu is outside `mu_hook`; for G(L) these are H(k,0) and
/// H(0,l).
std::optional<std::pair<Partition, Partition>> check_hook_constraint(const GradedCocharacter& d,
                                                                     partitions::HookSpec lambda_hook,
                                                                     partitions::HookSpec mu_hook);

struct BoundCheck {
  bool pass = true;
  Integer lhs;
  Integer rhs;
};

/// (k+l) 2^{2kl} n^{k^2+l^2+kl}.
Integer colength_bound(int k, int l, int n);

/// l_n < colength_bound(k, l, n).
BoundCheck check_colength_bound(const Cocharacter& d, int k, int l);

/// max d_lambda <= c_n <= l_n max d_lambda; lhs = max d_lambda, rhs =
/// l_n max d_lambda.
BoundCheck check_sandwich(const Cocharacter& d);

struct DualityWitness {
  Partition lambda;
  Partition mu;
  Integer plain;     // m_{lambda,mu}(L)
  Integer envelope;  // m_{lambda,mu'}(G(L))
};

/// m_{lambda,mu}(L) = m_{lambda,mu'}(G(L)) for every pair at signature
/// (q, m).
std::optional<DualityWitness> check_conjugate_duality(const AlgebraSpec& L, int q, int m,
                                                      const EngineOptions& options = {});

struct TildeCheck {
  int trials = 0;
  int identities = 0;  // trials where f was an identity of L
  std::optional<std::string> witness;

  bool pass() const { return !witness.has_value(); }
};

/// Random f in P_{q,m} with 1 <= q+m <= max_degree, mixing generic
/// polynomials with identities of L and identities of G(L) built from the
/// quotient bases: f vanishes on L iff tilde(f) vanishes on G(L), and
/// tilde(tilde(f)) = f.
TildeCheck check_tilde_identity_correspondence(const AlgebraSpec& L, int trials, int max_degree,
                                               std::uint64_t seed, const EngineOptions& options = {});

/// Random monomials of degree <= max_degree and random standard
/// assignments: evaluate_on_envelope must agree with the truncated
/// Grassmann oracle. Returns a description of the first disagreement.
std::optional<std::string> check_envelope_oracle(const AlgebraSpec& L, int cases, int max_degree,
                                                 std::uint64_t seed);

struct ExponentRow {
  int n = 0;
  Integer c_n;
  std::string root;   // c_n^{1/n}, 6 decimals
  std::string ratio;  // c_n / c_{n-1}, empty when undefined
  bool monotonicity_violation = false;
};

std::string format_root(const Integer& c, int n);
std::string format_ratio(const Integer& num, const Integer& den);

/// Roots and ratios; c_n < c_{n-1} is flagged when `centerless`.
std::vector<ExponentRow> exponent_report(const std::vector<std::pair<int, Integer>>& sequence,
                                         bool centerless);

}  // namespace pilab::codim

#endif  // PILAB_CHECKS_HPP
