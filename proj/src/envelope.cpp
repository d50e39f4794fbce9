#include "pilab/envelope.hpp"

#include <algorithm>
#include <bit>

#include "pilab/common.hpp"

namespace pilab::envelope {

GrassmannMonomial GrassmannMonomial::zero() { return GrassmannMonomial(); }

GrassmannMonomial::GrassmannMonomial(std::vector<int> generators, int sign)
    : gens_(std::move(generators)), sign_(sign) {
  for (std::size_t i = 1; i < gens_.size(); ++i) {
    if (gens_[i - 1] >= gens_[i]) {
      throw Error(ErrorKind::usage, "Grassmann monomial generators must be strictly increasing");
    }
  }
  if (sign_ == 0) gens_.clear();
}

GrassmannMonomial GrassmannMonomial::product(const std::vector<int>& generators) {
  std::vector<int> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return zero();
  return GrassmannMonomial(std::move(sorted), freealg::sequence_sign(generators));
}

GrassmannMonomial grassmann_multiply(const GrassmannMonomial& u, const GrassmannMonomial& v) {
  if (u.is_zero() || v.is_zero()) return GrassmannMonomial::zero();
  std::vector<int> cat = u.generators();
  cat.insert(cat.end(), v.generators().begin(), v.generators().end());
  GrassmannMonomial p = GrassmannMonomial::product(cat);
  if (p.is_zero()) return p;
  return GrassmannMonomial(p.generators(), p.sign() * u.sign() * v.sign());
}

EnvelopeAssignment EnvelopeAssignment::standard(const AlgebraSpec& L, std::vector<int> basis) {
  EnvelopeAssignment a;
  int next = 0;
  for (int b : basis) {
    if (b < 0 || b >= L.dim()) throw Error(ErrorKind::dimension_mismatch, "assignment: basis index");
    const int p = L.parity(b);
    a.parities.push_back(p);
    std::vector<int> block{next++};
    if (p == 0) block.push_back(next++);
    a.blocks.push_back(std::move(block));
  }
  a.basis = std::move(basis);
  return a;
}

void EnvelopeAssignment::check(const AlgebraSpec& L) const {
  if (parities.size() != basis.size() || blocks.size() != basis.size()) {
    throw Error(ErrorKind::dimension_mismatch, "assignment: inconsistent slot counts");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] < 0 || basis[i] >= L.dim()) {
      throw Error(ErrorKind::dimension_mismatch, "assignment: basis index");
    }
    if (L.parity(basis[i]) != parities[i] ||
        static_cast<int>(blocks[i].size()) % 2 != parities[i]) {
      throw Error(ErrorKind::parity_mismatch,
                  "assignment: slot " + std::to_string(i + 1) + " parity disagrees with its element");
    }
  }
}

namespace {

GrassmannMonomial block_product(const std::vector<std::vector<int>>& blocks,
                                const std::vector<int>& order) {
  std::vector<int> cat;
  for (int v : order) {
    const auto& b = blocks[static_cast<std::size_t>(v)];
    cat.insert(cat.end(), b.begin(), b.end());
  }
  return GrassmannMonomial::product(cat);
}

void check_typing(const freealg::Monomial& m, const freealg::VariableSet& vars,
                  const EnvelopeAssignment& a) {
  if (a.size() != m.degree()) {
    throw Error(ErrorKind::dimension_mismatch, "assignment does not cover the monomial");
  }
  if (!vars.is_typed()) return;
  for (int i = 0; i < a.size(); ++i) {
    if (static_cast<int>(vars.parity(i)) != a.parities[static_cast<std::size_t>(i)]) {
      throw Error(ErrorKind::parity_mismatch,
                  "variable " + vars.name(i) + " receives an element of the wrong parity");
    }
  }
}

}  // namespace

int koszul_sign(const freealg::Monomial& m, const EnvelopeAssignment& a) {
  if (a.size() != m.degree()) {
    throw Error(ErrorKind::dimension_mismatch, "assignment does not cover the monomial");
  }
  std::vector<int> slots(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) slots[static_cast<std::size_t>(i)] = i;
  const auto leaf = block_product(a.blocks, m.leaves());
  const auto slot = block_product(a.blocks, slots);
  return leaf.sign() * slot.sign();
}

namespace {

Element eval_rec(const AlgebraSpec& L, const freealg::Shape& s, const std::vector<int>& leaves,
                 std::size_t& pos, const std::vector<Element>& args) {
  if (s.is_leaf()) return args[static_cast<std::size_t>(leaves[pos++])];
  Element left = eval_rec(L, s.left(), leaves, pos, args);
  Element right = eval_rec(L, s.right(), leaves, pos, args);
  return L.bracket(left, right);
}

}  // namespace

Element evaluate_in_algebra(const AlgebraSpec& L, const freealg::Monomial& m,
                            const std::vector<Element>& args) {
  if (static_cast<int>(args.size()) != m.degree()) {
    throw Error(ErrorKind::dimension_mismatch, "evaluation needs one argument per variable");
  }
  std::size_t pos = 0;
  return eval_rec(L, m.shape(), m.leaves(), pos, args);
}

SignedElement evaluate_on_envelope(const AlgebraSpec& L, const freealg::Monomial& m,
                                   const freealg::VariableSet& vars,
                                   const EnvelopeAssignment& a) {
  a.check(L);
  check_typing(m, vars, a);
  std::vector<Element> args;
  for (int b : a.basis) args.push_back(L.table().basis_vector(b));
  return {koszul_sign(m, a), evaluate_in_algebra(L, m, args)};
}

namespace {

EnvelopeElement oracle_rec(const AlgebraSpec& L, const freealg::Shape& s,
                           const std::vector<int>& leaves, std::size_t& pos,
                           const EnvelopeAssignment& a) {
  if (s.is_leaf()) {
    const auto v = static_cast<std::size_t>(leaves[pos++]);
    const auto g = GrassmannMonomial::product(a.blocks[v]);
    EnvelopeElement out;
    if (g.is_zero()) return out;
    Element x = L.table().basis_vector(a.basis[v]);
    for (auto& c : x) c *= g.sign();
    out.emplace(g.generators(), std::move(x));
    return out;
  }
  const EnvelopeElement left = oracle_rec(L, s.left(), leaves, pos, a);
  const EnvelopeElement right = oracle_rec(L, s.right(), leaves, pos, a);
  EnvelopeElement out;
  for (const auto& [g, x] : left) {
    for (const auto& [h, y] : right) {
      const auto gh = grassmann_multiply(GrassmannMonomial(g, 1), GrassmannMonomial(h, 1));
      if (gh.is_zero()) continue;
      Element xy = L.bracket(x, y);
      auto [it, inserted] = out.try_emplace(gh.generators(), Element(xy.size(), 0));
      for (std::size_t k = 0; k < xy.size(); ++k) it->second[k] += gh.sign() * xy[k];
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    const bool zero = std::all_of(it->second.begin(), it->second.end(),
                                  [](const Rational& c) { return sgn(c) == 0; });
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

EnvelopeElement truncated_envelope_oracle(const AlgebraSpec& L, const freealg::Monomial& m,
                                          const freealg::VariableSet& vars,
                                          const EnvelopeAssignment& a) {
  a.check(L);
  check_typing(m, vars, a);
  std::size_t pos = 0;
  return oracle_rec(L, m.shape(), m.leaves(), pos, a);
}

AlgebraSpec truncated_envelope_algebra(const AlgebraSpec& L, int generators) {
  if (!L.is_graded()) {
    throw Error(ErrorKind::grading_required, "the envelope of " + L.name() + " needs a grading");
  }
  if (generators < 0 || generators > 16) {
    throw Error(ErrorKind::usage, "truncated envelope: generator count out of range");
  }
  struct Slot {
    int basis;
    unsigned mask;
  };
  std::vector<Slot> slots;
  std::map<std::pair<int, unsigned>, int> index;
  for (int i = 0; i < L.dim(); ++i) {
    for (unsigned mask = 0; mask < (1U << generators); ++mask) {
      if (std::popcount(mask) % 2 != L.parity(i)) continue;
      index[{i, mask}] = static_cast<int>(slots.size());
      slots.push_back({i, mask});
    }
  }
  auto gens_of = [](unsigned mask) {
    std::vector<int> g;
    for (int b = 0; mask >> b; ++b) {
      if ((mask >> b) & 1U) g.push_back(b);
    }
    return g;
  };
  const int dim = static_cast<int>(slots.size());
  algebras::StructureConstants t(dim);
  std::vector<std::string> names;
  std::vector<int> grading;
  for (const auto& s : slots) {
    std::string g;
    for (int b : gens_of(s.mask)) g += "e" + std::to_string(b + 1);
    names.push_back(L.basis_names()[static_cast<std::size_t>(s.basis)] + "*" + (g.empty() ? "1" : g));
    grading.push_back(L.parity(s.basis));
  }
  for (int u = 0; u < dim; ++u) {
    for (int v = 0; v < dim; ++v) {
      const auto& su = slots[static_cast<std::size_t>(u)];
      const auto& sv = slots[static_cast<std::size_t>(v)];
      const auto gh = grassmann_multiply(GrassmannMonomial(gens_of(su.mask), 1),
                                         GrassmannMonomial(gens_of(sv.mask), 1));
      if (gh.is_zero()) continue;
      const unsigned mask = su.mask | sv.mask;
      for (int k = 0; k < L.dim(); ++k) {
        const Rational& c = L.table().at(su.basis, sv.basis, k);
        if (sgn(c) == 0) continue;
        t.at(u, v, index.at({k, mask})) += gh.sign() * c;
      }
    }
  }
  return AlgebraSpec("G" + std::to_string(generators) + "(" + L.name() + ")", std::move(names),
                     std::move(t), std::move(grading), algebras::AlgebraClass::super_lie);
}

}  // namespace pilab::envelope
