#include "pilab/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "pilab/common.hpp"

namespace pilab::partitions {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw Error(ErrorKind::usage, "partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorKind::usage, "partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw Error(ErrorKind::usage, "negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int i = 1; i <= lambda.part(0); ++i) {
    int count = 0;
    for (int p : lambda.parts()) {
      if (p >= i) ++count;
    }
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

bool in_hook(const Partition& lambda, HookSpec hook) {
  return lambda.part(hook.k) <= hook.l;
}

Partition hook_partition(int k, int l, int d) {
  if (k < 0 || l < 0 || d < 0) {
    throw Error(ErrorKind::invalid_hook, "hook parameters must be non-negative");
  }
  if (k == 0 && l == 0 && d > 0) {
    throw Error(ErrorKind::invalid_hook, "h(0,0,d) is undefined for d > 0");
  }
  std::vector<int> parts;
  if (l + d > 0) parts.insert(parts.end(), static_cast<std::size_t>(k), l + d);
  if (l > 0) parts.insert(parts.end(), static_cast<std::size_t>(d), l);
  return Partition(std::move(parts));
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class dimension(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  mpz_class hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      hooks *= (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<Key, mpz_class> values;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

// Partition from a beta set (any order) with `len` entries.
std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

mpz_class mn_recurse(const std::vector<int>& lambda,
                     const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;

  Key key{lambda, mu};
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().values.find(key);
    if (it != memo().values.end()) return it->second;
  }

  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) {
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  }
  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());

  mpz_class total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    std::vector<int> next = beta;
    next[i] = target;
    mpz_class term = mn_recurse(from_beta(std::move(next)), rest);
    if (between % 2) total -= term;
    else total += term;
  }

  std::unique_lock lock(memo().mutex);
  memo().values.emplace(std::move(key), total);
  return total;
}

}  // namespace

mpz_class character_value(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorKind::dimension_mismatch,
                "character_value: " + lambda.to_string() + " and class " +
                    mu.to_string() + " have different sizes");
  }
  return mn_recurse({lambda.parts().begin(), lambda.parts().end()},
                    {mu.parts().begin(), mu.parts().end()});
}

mpz_class centralizer_order(const CycleType& mu) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(m));
    z *= power * factorial(m);
  }
  return z;
}

mpz_class class_size(const CycleType& mu) {
  return factorial(mu.size()) / centralizer_order(mu);
}

namespace {

struct LrSearch {
  std::vector<int> inner;  // lambda, padded to the rows of nu
  std::vector<int> outer;  // nu
  std::vector<int> content;
  std::vector<std::vector<int>> filling;  // filling[r][c], 0 where not a skew cell
  std::vector<int> counts;
  std::uint64_t found = 0;

  void place(int row, int col) {
    if (row == static_cast<int>(outer.size())) {
      ++found;
      return;
    }
    const int start = inner[static_cast<std::size_t>(row)];
    if (col < start) {
      const int next_row = row + 1;
      place(next_row, next_row < static_cast<int>(outer.size())
                          ? outer[static_cast<std::size_t>(next_row)] - 1
                          : -1);
      return;
    }
    auto& cells = filling[static_cast<std::size_t>(row)];
    const bool has_right = col + 1 < outer[static_cast<std::size_t>(row)];
    int max_value = static_cast<int>(content.size());
    if (has_right) max_value = std::min(max_value, cells[static_cast<std::size_t>(col + 1)]);
    int min_value = 1;
    if (row > 0 && col >= inner[static_cast<std::size_t>(row - 1)]) {
      min_value = filling[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1;
    }
    for (int v = min_value; v <= max_value; ++v) {
      const auto vi = static_cast<std::size_t>(v - 1);
      if (counts[vi] >= content[vi]) continue;
      if (v > 1 && counts[vi] + 1 > counts[vi - 1]) continue;
      ++counts[vi];
      cells[static_cast<std::size_t>(col)] = v;
      place(row, col - 1);
      cells[static_cast<std::size_t>(col)] = 0;
      --counts[vi];
    }
  }
};

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) {
    throw Error(ErrorKind::dimension_mismatch,
                "lr_coefficient: |lambda| + |mu| != |nu|");
  }
  if (lambda.length() > nu.length()) return 0;
  for (int i = 0; i < lambda.length(); ++i) {
    if (lambda.part(i) > nu.part(i)) return 0;
  }
  LrSearch search;
  search.outer.assign(nu.parts().begin(), nu.parts().end());
  search.inner.resize(search.outer.size());
  for (std::size_t i = 0; i < search.inner.size(); ++i) {
    search.inner[i] = lambda.part(static_cast<int>(i));
  }
  search.content.assign(mu.parts().begin(), mu.parts().end());
  search.counts.assign(search.content.size(), 0);
  search.filling.resize(search.outer.size());
  for (std::size_t i = 0; i < search.outer.size(); ++i) {
    search.filling[i].assign(static_cast<std::size_t>(search.outer[i]), 0);
  }
  if (search.outer.empty()) return 1;
  search.place(0, search.outer[0] - 1);
  return search.found;
}

mpz_class sum_dimensions_in_hook(HookSpec hook, int n) {
  mpz_class total = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    if (in_hook(lambda, hook)) total += dimension(lambda);
  }
  return total;
}

}  // namespace pilab::partitions
