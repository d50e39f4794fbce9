#include "pilab/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "pilab/common.hpp"

namespace pilab::freealg {

VariableSet VariableSet::untyped(int n) {
  if (n < 0) throw Error(ErrorKind::usage, "negative variable count");
  return VariableSet(false, n, 0);
}

VariableSet VariableSet::typed(int even, int odd) {
  if (even < 0 || odd < 0) throw Error(ErrorKind::usage, "negative variable count");
  return VariableSet(true, even, odd);
}

std::string VariableSet::name(int var) const {
  if (!typed_) return "z" + std::to_string(var + 1);
  if (var < even_) return "x" + std::to_string(var + 1);
  return "y" + std::to_string(var - even_ + 1);
}

std::uint64_t catalan(int n) {
  // C(2n, n)/(n+1) by the recurrence C_{k+1} = C_k * 2(2k+1)/(k+2).
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) / static_cast<std::uint64_t>(k + 2);
  return c;
}

Shape Shape::leaf() {
  static const Shape instance = [] {
    auto d = std::make_shared<Data>();
    d->postfix = {true};
    return Shape(std::move(d));
  }();
  return instance;
}

Shape Shape::join(const Shape& left, const Shape& right) {
  auto d = std::make_shared<Data>();
  const int n = left.leaves() + right.leaves();
  d->leaves = n;
  std::uint64_t offset = 0;
  for (int j = left.leaves() + 1; j <= n - 1; ++j) {
    offset += catalan(j - 1) * catalan(n - j - 1);
  }
  d->rank = offset + left.rank() * catalan(right.leaves() - 1) + right.rank();
  d->dyck = "(" + left.dyck() + ")" + right.dyck();
  d->postfix = left.postfix();
  d->postfix.insert(d->postfix.end(), right.postfix().begin(), right.postfix().end());
  d->postfix.push_back(false);
  d->left = std::make_shared<const Shape>(left);
  d->right = std::make_shared<const Shape>(right);
  return Shape(std::move(d));
}

Shape Shape::left_normed(int n) {
  if (n < 1) throw Error(ErrorKind::usage, "shape needs at least one leaf");
  Shape s = leaf();
  for (int i = 1; i < n; ++i) s = join(s, leaf());
  return s;
}

namespace {

Shape parse_dyck(const std::string& s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '(') {
    ++pos;
    Shape left = parse_dyck(s, pos);
    if (pos >= s.size() || s[pos] != ')') {
      throw Error(ErrorKind::usage, "malformed bracketing shape '" + s + "'");
    }
    ++pos;
    Shape right = parse_dyck(s, pos);
    return Shape::join(left, right);
  }
  return Shape::leaf();
}

}  // namespace

Shape Shape::from_dyck(const std::string& dyck) {
  std::size_t pos = 0;
  Shape s = parse_dyck(dyck, pos);
  if (pos != dyck.size()) throw Error(ErrorKind::usage, "malformed bracketing shape '" + dyck + "'");
  return s;
}

std::vector<Shape> Shape::enumerate(int n) {
  if (n < 1) throw Error(ErrorKind::usage, "shape needs at least one leaf");
  if (n == 1) return {leaf()};
  std::vector<Shape> out;
  for (int left = n - 1; left >= 1; --left) {
    const auto lefts = enumerate(left);
    const auto rights = enumerate(n - left);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(join(l, r));
    }
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::usage, "not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycle_type(const partitions::CycleType& mu) {
  std::vector<int> images(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int len : mu.parts()) {
    for (int i = 0; i < len; ++i) {
      images[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    images[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw Error(ErrorKind::dimension_mismatch, "compose: sizes differ");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image(other.image(static_cast<int>(i)));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(out));
}

int Permutation::sign() const { return sequence_sign(images_); }

partitions::CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return partitions::CycleType(std::move(lengths));
}

int sequence_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

Monomial::Monomial(Shape shape, std::vector<int> leaves)
    : shape_(std::move(shape)), leaves_(std::move(leaves)) {
  if (static_cast<int>(leaves_.size()) != shape_.leaves()) {
    throw Error(ErrorKind::dimension_mismatch, "monomial: leaf count does not match shape");
  }
  std::vector<bool> seen(leaves_.size(), false);
  for (int v : leaves_) {
    if (v < 0 || v >= static_cast<int>(leaves_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::usage, "monomial must use each variable exactly once");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

namespace {

void render(const Shape& s, const std::vector<int>& leaves, std::size_t& next,
            const VariableSet& vars, std::string& out) {
  if (s.is_leaf()) {
    out += vars.name(leaves[next++]);
    return;
  }
  out += '[';
  render(s.left(), leaves, next, vars, out);
  out += ',';
  render(s.right(), leaves, next, vars, out);
  out += ']';
}

struct MonomialParser {
  const std::string& text;
  const VariableSet& vars;
  std::size_t pos = 0;
  std::vector<int> leaves;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse_error, "monomial '" + text + "' at column " +
                                            std::to_string(pos + 1) + ": " + why);
  }

  Shape parse() {
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      Shape left = parse();
      if (pos >= text.size() || text[pos] != ',') fail("expected ','");
      ++pos;
      Shape right = parse();
      if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
      ++pos;
      return Shape::join(left, right);
    }
    if (pos >= text.size()) fail("unexpected end");
    const char kind = text[pos++];
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) fail("expected a variable index");
    const int index = std::stoi(text.substr(pos, end - pos)) - 1;
    pos = end;
    int var = -1;
    if (!vars.is_typed() && kind == 'z') var = index;
    else if (vars.is_typed() && kind == 'x' && index < vars.even_count()) var = index;
    else if (vars.is_typed() && kind == 'y' && index < vars.odd_count()) var = vars.even_count() + index;
    if (var < 0 || var >= vars.size()) fail("variable not declared");
    leaves.push_back(var);
    return Shape::leaf();
  }
};

}  // namespace

std::string Monomial::to_string(const VariableSet& vars) const {
  std::string out;
  std::size_t next = 0;
  render(shape_, leaves_, next, vars, out);
  return out;
}

Monomial parse_monomial(const std::string& text, const VariableSet& vars) {
  MonomialParser p{text, vars, 0, {}};
  Shape s = p.parse();
  if (p.pos != text.size()) p.fail("trailing characters");
  if (static_cast<int>(p.leaves.size()) != vars.size()) p.fail("not multilinear in the declared variables");
  return Monomial(s, std::move(p.leaves));
}

Polynomial::Polynomial(VariableSet vars, const Monomial& m, const Rational& c) : vars_(vars) {
  add_term(m, c);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.degree() != vars_.size()) {
    throw Error(ErrorKind::dimension_mismatch, "polynomial: monomial degree does not match variables");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_vars(const Polynomial& other) const {
  if (!(vars_ == other.vars_)) {
    throw Error(ErrorKind::dimension_mismatch, "polynomials over different variable sets");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str() + "*" + m.to_string(vars_);
  }
  return out;
}

std::string_view to_string(SpanningKind kind) {
  return kind == SpanningKind::left_normed ? "left-normed" : "all-bracketings";
}

SpanningKind spanning_kind_from_string(std::string_view s) {
  if (s == "left-normed") return SpanningKind::left_normed;
  if (s == "all-bracketings") return SpanningKind::all_bracketings;
  throw Error(ErrorKind::usage, "unknown spanning set '" + std::string(s) + "'");
}

std::vector<Monomial> generate_spanning_set(SpanningKind kind, const VariableSet& vars) {
  const int n = vars.size();
  if (n < 1) throw Error(ErrorKind::usage, "spanning set needs n >= 1");
  const std::vector<Shape> shapes =
      kind == SpanningKind::left_normed ? std::vector<Shape>{Shape::left_normed(n)} : Shape::enumerate(n);
  std::vector<Monomial> out;
  for (const auto& s : shapes) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      out.emplace_back(s, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Monomial act_permutation(const Permutation& sigma, const Monomial& m, const VariableSet& vars) {
  if (sigma.size() != m.degree()) {
    throw Error(ErrorKind::dimension_mismatch, "act_permutation: permutation size");
  }
  if (vars.is_typed()) {
    for (int i = 0; i < sigma.size(); ++i) {
      if (vars.parity(i) != vars.parity(sigma.image(i))) {
        throw Error(ErrorKind::parity_mismatch,
                    "act_permutation: sends " + vars.name(i) + " to " + vars.name(sigma.image(i)));
      }
    }
  }
  std::vector<int> leaves = m.leaves();
  for (int& v : leaves) v = sigma.image(v);
  return Monomial(m.shape(), std::move(leaves));
}

Polynomial act_permutation(const Permutation& sigma, const Polynomial& f) {
  Polynomial out(f.vars());
  for (const auto& [m, c] : f.terms()) out.add_term(act_permutation(sigma, m, f.vars()), c);
  return out;
}

int tilde_sign(const Monomial& m, const VariableSet& vars) {
  std::vector<int> odd;
  for (int v : m.leaves()) {
    if (vars.parity(v) == Parity::odd) odd.push_back(v);
  }
  return sequence_sign(odd);
}

Polynomial tilde(const Polynomial& f) {
  if (!f.vars().is_typed()) {
    throw Error(ErrorKind::parity_required, "tilde needs even/odd typed variables");
  }
  Polynomial out(f.vars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, tilde_sign(m, f.vars()) * c);
  return out;
}

partitions::Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) {
    if (!r.empty()) parts.push_back(static_cast<int>(r.size()));
  }
  return partitions::Partition(std::move(parts));
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(r[c]);
    }
  }
  return cols;
}

namespace {

// Every permutation of {0..n-1} that permutes each block among itself,
// paired with its sign.
std::vector<std::pair<Permutation, int>> block_group(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::pair<Permutation, int>> out{{Permutation::identity(n), 1}};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<Permutation, int>> next;
    std::vector<int> arrangement = sorted;
    do {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 0);
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        images[static_cast<std::size_t>(sorted[i])] = arrangement[i];
      }
      Permutation g(std::move(images));
      const int s = sequence_sign(arrangement);
      for (const auto& [p, ps] : out) next.emplace_back(g.compose(p), s * ps);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  return out;
}

Polynomial symmetrize(const Tableau& t, const Polynomial& f) {
  const int n = f.vars().size();
  Polynomial alternated(f.vars());
  for (const auto& [q, sign] : block_group(n, t.columns())) {
    Polynomial term = act_permutation(q, f);
    term *= Rational(sign);
    alternated += term;
  }
  Polynomial out(f.vars());
  for (const auto& [p, sign] : block_group(n, t.rows)) {
    (void)sign;
    out += act_permutation(p, alternated);
  }
  return out;
}

void check_tableau(const Tableau& t, int first, int count, const char* which) {
  std::vector<int> entries = t.entries();
  std::sort(entries.begin(), entries.end());
  std::vector<int> expected(static_cast<std::size_t>(count));
  std::iota(expected.begin(), expected.end(), first);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    if (t.rows[i].size() > t.rows[i - 1].size()) {
      throw Error(ErrorKind::tableau_mismatch, std::string(which) + " tableau rows are not weakly decreasing");
    }
  }
  if (entries != expected) {
    throw Error(ErrorKind::tableau_mismatch,
                std::string(which) + " tableau does not fill its variable set exactly once");
  }
}

}  // namespace

Polynomial apply_young_symmetrizer(const Tableau& tx, const std::optional<Tableau>& ty,
                                   const Polynomial& f) {
  const VariableSet& vars = f.vars();
  if (!vars.is_typed()) {
    if (ty) throw Error(ErrorKind::tableau_mismatch, "untyped polynomial takes a single tableau");
    check_tableau(tx, 0, vars.size(), "x");
    return symmetrize(tx, f);
  }
  check_tableau(tx, 0, vars.even_count(), "x");
  Polynomial out = symmetrize(tx, f);
  if (ty) {
    check_tableau(*ty, vars.even_count(), vars.odd_count(), "y");
    out = symmetrize(*ty, out);
  }
  return out;
}

}  // namespace pilab::freealg
