#include "pilab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "pilab/common.hpp"
#include "pilab/envelope.hpp"

namespace pilab::codim {

std::optional<Partition> check_hook_constraint(const Cocharacter& d, partitions::HookSpec hook) {
  for (const auto& [lambda, m] : d.entries) {
    if (sgn(m) != 0 && !partitions::in_hook(lambda, hook)) return lambda;
  }
  return std::nullopt;
}

std::optional<std::pair<Partition, Partition>> check_hook_constraint(const GradedCocharacter& d,
                                                                     partitions::HookSpec lambda_hook,
                                                                     partitions::HookSpec mu_hook) {
  for (const auto& [lambda, mu, m] : d.entries) {
    if (sgn(m) == 0) continue;
    if (!partitions::in_hook(lambda, lambda_hook) || !partitions::in_hook(mu, mu_hook)) {
      return std::make_pair(lambda, mu);
    }
  }
  return std::nullopt;
}

Integer colength_bound(int k, int l, int n) {
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(k * k + l * l + k * l));
  Integer two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(2 * k * l));
  return Integer(k + l) * two * power;
}

BoundCheck check_colength_bound(const Cocharacter& d, int k, int l) {
  BoundCheck out;
  out.lhs = d.colength();
  out.rhs = colength_bound(k, l, d.n);
  out.pass = sgn(out.lhs) == 0 || out.lhs < out.rhs;
  return out;
}

BoundCheck check_sandwich(const Cocharacter& d) {
  BoundCheck out;
  out.lhs = d.max_dimension();
  out.rhs = d.colength() * out.lhs;
  const Integer c = d.codimension();
  out.pass = out.lhs <= c && c <= out.rhs;
  return out;
}

std::optional<DualityWitness> check_conjugate_duality(const AlgebraSpec& L, int q, int m,
                                                      const EngineOptions& options) {
  const auto plain = graded_cocharacter(EvaluationTarget::plain(L), q, m, options);
  const auto env = graded_cocharacter(EvaluationTarget::envelope(L), q, m, options);
  std::map<std::pair<Partition, Partition>, Integer> lhs, rhs;
  for (const auto& [lambda, mu, mult] : plain.entries) lhs[{lambda, mu}] = mult;
  for (const auto& [lambda, mu, mult] : env.entries) rhs[{lambda, partitions::conjugate(mu)}] = mult;
  for (const auto& lambda : partitions::enumerate_partitions(q)) {
    for (const auto& mu : partitions::enumerate_partitions(m)) {
      const auto a = lhs.contains({lambda, mu}) ? lhs.at({lambda, mu}) : Integer(0);
      const auto b = rhs.contains({lambda, mu}) ? rhs.at({lambda, mu}) : Integer(0);
      if (a != b) return DualityWitness{lambda, mu, a, b};
    }
  }
  return std::nullopt;
}

namespace {

struct Signature {
  QuotientModel plain;
  QuotientModel envelope;
};

Monomial random_monomial(const std::vector<freealg::Shape>& shapes, int n, std::mt19937_64& rng) {
  const auto& s = shapes[rng() % shapes.size()];
  std::vector<int> leaves(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) leaves[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(leaves[static_cast<std::size_t>(i)], leaves[rng() % static_cast<std::size_t>(i + 1)]);
  }
  return Monomial(s, std::move(leaves));
}

Rational random_coefficient(std::mt19937_64& rng) {
  const long v = static_cast<long>(rng() % 10) - 5;
  return Rational(v >= 0 ? v + 1 : v);
}

}  // namespace

TildeCheck check_tilde_identity_correspondence(const AlgebraSpec& L, int trials, int max_degree,
                                               std::uint64_t seed, const EngineOptions& options) {
  const auto plain = EvaluationTarget::plain(L);
  const auto env = EvaluationTarget::envelope(L);
  EngineOptions exact = options;
  exact.arithmetic = Arithmetic::exact;
  exact.spanning = SpanningKind::all_bracketings;

  std::vector<std::pair<int, int>> signatures;
  for (int n = 1; n <= max_degree; ++n) {
    for (int q = 0; q <= n; ++q) signatures.emplace_back(q, n - q);
  }
  std::map<std::pair<int, int>, Signature> models;
  std::map<int, std::vector<freealg::Shape>> shapes;
  std::mt19937_64 rng(seed);
  TildeCheck out;

  for (int t = 0; t < trials && out.pass(); ++t) {
    const auto [q, m] = signatures[rng() % signatures.size()];
    const int n = q + m;
    const auto vars = VariableSet::typed(q, m);
    auto it = models.find({q, m});
    if (it == models.end()) {
      it = models.emplace(std::make_pair(q, m),
                          Signature{QuotientModel(plain, vars, exact), QuotientModel(env, vars, exact)})
               .first;
    }
    if (!shapes.contains(n)) shapes[n] = freealg::Shape::enumerate(n);
    const auto& model = it->second;

    // 0: generic combination, 1: identity of L, 2: tilde of an identity of G(L).
    const auto kind = rng() % 3;
    const int terms = 1 + static_cast<int>(rng() % 3);
    Polynomial f(vars);
    for (int i = 0; i < terms; ++i) {
      const Monomial mono = random_monomial(shapes[n], n, rng);
      const Rational c = random_coefficient(rng);
      if (kind == 0) {
        f.add_term(mono, c);
      } else {
        Polynomial g = (kind == 1 ? model.plain : model.envelope).identity_from(mono);
        g *= c;
        f += kind == 1 ? g : freealg::tilde(g);
      }
    }
    const Polynomial tf = freealg::tilde(f);
    const bool on_plain = model.plain.evaluator().annihilates(f);
    const bool on_env = model.envelope.evaluator().annihilates(tf);
    out.trials = t + 1;
    if (on_plain) ++out.identities;
    std::string problem;
    if (!(freealg::tilde(tf) == f)) problem = "tilde is not involutive";
    if (on_plain != on_env) problem = "identity membership differs";
    if (kind != 0 && !on_plain) problem = "constructed identity does not vanish";
    if (!problem.empty()) {
      out.witness = problem + " at (q,m)=(" + std::to_string(q) + "," + std::to_string(m) +
                    "): f = " + f.to_string() + " (L: " + (on_plain ? "identity" : "not identity") +
                    ", G(L) on tilde f: " + (on_env ? "identity" : "not identity") + ")";
    }
  }
  return out;
}

std::optional<std::string> check_envelope_oracle(const AlgebraSpec& L, int cases, int max_degree,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<int, std::vector<freealg::Shape>> shapes;
  for (int t = 0; t < cases; ++t) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    if (!shapes.contains(n)) shapes[n] = freealg::Shape::enumerate(n);
    const Monomial mono = random_monomial(shapes[n], n, rng);
    std::vector<int> basis;
    for (int i = 0; i < n; ++i) basis.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(L.dim())));
    const auto a = envelope::EnvelopeAssignment::standard(L, basis);
    const auto vars = VariableSet::untyped(n);
    const auto fast = envelope::evaluate_on_envelope(L, mono, vars, a);
    const auto oracle = envelope::truncated_envelope_oracle(L, mono, vars, a);

    std::vector<int> all;
    for (const auto& b : a.blocks) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    const bool zero = std::all_of(fast.value.begin(), fast.value.end(),
                                  [](const Rational& c) { return sgn(c) == 0; });
    bool agree;
    if (zero) {
      agree = oracle.empty();
    } else {
      agree = oracle.size() == 1 && oracle.begin()->first == all;
      if (agree) {
        for (std::size_t k = 0; k < fast.value.size(); ++k) {
          agree = agree && oracle.begin()->second[k] == fast.sign * fast.value[k];
        }
      }
    }
    std::vector<int> odd;
    for (int v : mono.leaves()) {
      if (a.parities[static_cast<std::size_t>(v)] == 1) odd.push_back(v);
    }
    if (freealg::sequence_sign(odd) != fast.sign) agree = false;
    if (!agree) {
      std::string tuple;
      for (int b : basis) tuple += (tuple.empty() ? "" : ",") + L.basis_names()[static_cast<std::size_t>(b)];
      return "monomial " + mono.to_string(vars) + " on (" + tuple + ")";
    }
  }
  return std::nullopt;
}

std::string format_root(const Integer& c, int n) {
  if (sgn(c) <= 0 || n <= 0) return "0.000000";
  const long double v = std::exp(std::log(static_cast<long double>(c.get_d())) / n);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", v);
  return buf;
}

std::string format_ratio(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) return "";
  const Rational r(num, den);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.get_d());
  return buf;
}

std::vector<ExponentRow> exponent_report(const std::vector<std::pair<int, Integer>>& sequence,
                                         bool centerless) {
  std::vector<ExponentRow> out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& [n, c] = sequence[i];
    if (sgn(c) < 0) throw Error(ErrorKind::usage, "codimensions are non-negative");
    ExponentRow row;
    row.n = n;
    row.c_n = c;
    row.root = format_root(c, n);
    if (i > 0 && sequence[i - 1].first == n - 1) {
      row.ratio = format_ratio(c, sequence[i - 1].second);
      row.monotonicity_violation = centerless && c < sequence[i - 1].second;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace pilab::codim
