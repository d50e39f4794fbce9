#ifndef PILAB_PARTITIONS_HPP
#define PILAB_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pilab::partitions {

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part (0-based); 0 past the end.
  int part(int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A partition read as the cycle lengths of a conjugacy class of S_n.
using CycleType = Partition;

/// The hook H(k, l): partitions whose (k+1)-th part is at most l.
struct HookSpec {
  int k = 0;
  int l = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first,
/// (1,...,1) last.
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

bool in_hook(const Partition& lambda, HookSpec hook);

/// h(k,l,d) = (l+d repeated k times, l repeated d times), zero parts
/// dropped. Throws invalid_hook when k = l = 0 and d > 0.
Partition hook_partition(int k, int l, int d);

mpz_class factorial(int n);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
mpz_class dimension(const Partition& lambda);

/// chi_lambda evaluated on the class mu, by Murnaghan-Nakayama with a
/// shared write-once memo.
mpz_class character_value(const Partition& lambda, const CycleType& mu);

/// z_mu = prod_i i^{m_i} m_i!.
mpz_class centralizer_order(const CycleType& mu);

/// n! / z_mu.
mpz_class class_size(const CycleType& mu);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, by counting LR skew
/// tableaux of shape nu/lambda and content mu.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu);

/// Sum of d_lambda over lambda |- n lying in the hook.
mpz_class sum_dimensions_in_hook(HookSpec hook, int n);

}  // namespace pilab::partitions

#endif  // PILAB_PARTITIONS_HPP
