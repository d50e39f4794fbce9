#include "pilab/algebras.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "pilab/common.hpp"
#include "pilab/exactlin.hpp"

namespace pilab::algebras {

std::string_view to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::lie: return "lie";
    case AlgebraClass::super_lie: return "super-lie";
    case AlgebraClass::nonassociative: return "nonassociative";
  }
  return "unknown";
}

AlgebraClass algebra_class_from_string(std::string_view s) {
  if (s == "lie") return AlgebraClass::lie;
  if (s == "super-lie") return AlgebraClass::super_lie;
  if (s == "nonassociative") return AlgebraClass::nonassociative;
  throw Error(ErrorKind::invalid_algebra, "unknown algebra class '" + std::string(s) + "'");
}

Element StructureConstants::bracket(const Element& u, const Element& v) const {
  Element out(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i) {
    if (sgn(u[static_cast<std::size_t>(i)]) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (sgn(v[static_cast<std::size_t>(j)]) == 0) continue;
      const Rational uv = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
      for (int k = 0; k < dim_; ++k) {
        const Rational& c = at(i, j, k);
        if (sgn(c) != 0) out[static_cast<std::size_t>(k)] += uv * c;
      }
    }
  }
  return out;
}

Element StructureConstants::basis_vector(int i) const {
  Element e(static_cast<std::size_t>(dim_), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

std::string IdentityWitness::to_string() const {
  std::ostringstream out;
  out << identity << " fails at (" << i + 1;
  if (j >= 0) out << ',' << j + 1;
  if (k >= 0) out << ',' << k + 1;
  out << ')';
  return out.str();
}

namespace {

bool is_zero(const Element& e) {
  for (const auto& x : e) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Element add(Element a, const Element& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

}  // namespace

Validation validate_lie(const StructureConstants& t) {
  const int d = t.dim();
  for (int i = 0; i < d; ++i) {
    if (!is_zero(t.bracket(t.basis_vector(i), t.basis_vector(i)))) {
      return IdentityWitness{"[b_i,b_i]=0", i, i, -1};
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const auto a = t.bracket(t.basis_vector(i), t.basis_vector(j));
      const auto b = t.bracket(t.basis_vector(j), t.basis_vector(i));
      if (!is_zero(add(a, b))) return IdentityWitness{"anticommutativity", i, j, -1};
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const auto bi = t.basis_vector(i), bj = t.basis_vector(j), bk = t.basis_vector(k);
        Element sum = t.bracket(t.bracket(bi, bj), bk);
        sum = add(sum, t.bracket(t.bracket(bj, bk), bi));
        sum = add(sum, t.bracket(t.bracket(bk, bi), bj));
        if (!is_zero(sum)) return IdentityWitness{"Jacobi", i, j, k};
      }
    }
  }
  return std::nullopt;
}

Validation check_grading(const StructureConstants& t, const std::vector<int>& grading) {
  const int d = t.dim();
  if (static_cast<int>(grading.size()) != d) {
    return IdentityWitness{"grading length", -1, -1, -1};
  }
  for (int v : grading) {
    if (v != 0 && v != 1) return IdentityWitness{"grading values in {0,1}", -1, -1, -1};
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (sgn(t.at(i, j, k)) == 0) continue;
        const auto gi = static_cast<std::size_t>(i), gj = static_cast<std::size_t>(j),
                   gk = static_cast<std::size_t>(k);
        if ((grading[gi] + grading[gj]) % 2 != grading[gk]) {
          return IdentityWitness{"grading compatibility", i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

Validation validate_super_lie(const StructureConstants& t, const std::vector<int>& grading) {
  if (grading.empty()) {
    throw Error(ErrorKind::grading_required, "validate_super_lie needs a grading");
  }
  if (auto w = check_grading(t, grading)) return w;
  const int d = t.dim();
  auto par = [&](int i) { return grading[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const auto a = t.bracket(t.basis_vector(i), t.basis_vector(j));
      const auto b = t.bracket(t.basis_vector(j), t.basis_vector(i));
      const int s = (par(i) * par(j)) % 2 ? -1 : 1;
      if (!is_zero(add(a, b, s))) return IdentityWitness{"super-anticommutativity", i, j, -1};
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const auto bi = t.basis_vector(i), bj = t.basis_vector(j), bk = t.basis_vector(k);
        // (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]
        Element sum(static_cast<std::size_t>(d), 0);
        sum = add(sum, t.bracket(bi, t.bracket(bj, bk)), par(i) * par(k) % 2 ? -1 : 1);
        sum = add(sum, t.bracket(bj, t.bracket(bk, bi)), par(j) * par(i) % 2 ? -1 : 1);
        sum = add(sum, t.bracket(bk, t.bracket(bi, bj)), par(k) * par(j) % 2 ? -1 : 1);
        if (!is_zero(sum)) return IdentityWitness{"super-Jacobi", i, j, k};
      }
    }
  }
  return std::nullopt;
}

AlgebraSpec::AlgebraSpec(std::string name, std::vector<std::string> basis, StructureConstants table,
                         std::optional<std::vector<int>> grading, AlgebraClass declared)
    : name_(std::move(name)), basis_(std::move(basis)), table_(std::move(table)),
      grading_(std::move(grading)), class_(declared) {
  if (static_cast<int>(basis_.size()) != table_.dim()) {
    throw Error(ErrorKind::invalid_algebra, name_ + ": basis has " + std::to_string(basis_.size()) +
                                                " names but dim is " + std::to_string(table_.dim()));
  }
  if (grading_) {
    if (auto w = check_grading(table_, *grading_)) {
      throw Error(ErrorKind::invalid_algebra, name_ + ": " + w->to_string());
    }
  }
  Validation v;
  switch (class_) {
    case AlgebraClass::lie: v = validate_lie(table_); break;
    case AlgebraClass::super_lie:
      if (!grading_) throw Error(ErrorKind::grading_required, name_ + ": super-lie class needs a grading");
      v = validate_super_lie(table_, *grading_);
      break;
    case AlgebraClass::nonassociative: break;
  }
  if (v) throw Error(ErrorKind::invalid_algebra, name_ + ": " + v->to_string());
}

int AlgebraSpec::even_dim() const {
  int n = 0;
  for (int i = 0; i < dim(); ++i) n += parity(i) == 0;
  return n;
}

int AlgebraSpec::odd_dim() const { return dim() - even_dim(); }

Element AlgebraSpec::bracket(const Element& u, const Element& v) const {
  if (static_cast<int>(u.size()) != dim() || static_cast<int>(v.size()) != dim()) {
    throw Error(ErrorKind::dimension_mismatch, "bracket: coordinate vectors must have length " +
                                                   std::to_string(dim()));
  }
  return table_.bracket(u, v);
}

int AlgebraSpec::center_dim() const {
  const auto d = static_cast<std::size_t>(dim());
  exactlin::DenseMatrix<Rational> m(d, d * d, 0);
  for (int z = 0; z < dim(); ++z) {
    for (int i = 0; i < dim(); ++i) {
      for (int k = 0; k < dim(); ++k) {
        m(static_cast<std::size_t>(z), static_cast<std::size_t>(i) * d + static_cast<std::size_t>(k)) =
            table_.at(z, i, k);
      }
    }
  }
  return dim() - static_cast<int>(exactlin::rank(m));
}

namespace {

void set_antisymmetric(StructureConstants& t, int i, int j, int k, const Rational& c) {
  t.at(i, j, k) = c;
  t.at(j, i, k) = -c;
}

AlgebraSpec make_sl2(const std::string& name, std::vector<int> grading) {
  // Basis e, h, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  StructureConstants t(3);
  set_antisymmetric(t, 1, 0, 0, 2);
  set_antisymmetric(t, 1, 2, 2, -2);
  set_antisymmetric(t, 0, 2, 1, 1);
  return AlgebraSpec(name, {"e", "h", "f"}, std::move(t), std::move(grading), AlgebraClass::lie);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"metabelian", "abelian(d)", "sl2-cartan", "sl2-trivial", "heisenberg"};
}

AlgebraSpec builtin(std::string_view name) {
  const std::string n(name);
  if (n == "metabelian") {
    StructureConstants t(2);
    set_antisymmetric(t, 0, 1, 1, 1);  // [e,f] = f
    return AlgebraSpec(n, {"e", "f"}, std::move(t), std::vector<int>{0, 1}, AlgebraClass::lie);
  }
  if (n == "sl2-cartan") return make_sl2(n, {1, 0, 1});
  if (n == "sl2-trivial") return make_sl2(n, {0, 0, 0});
  if (n == "heisenberg") {
    StructureConstants t(3);
    set_antisymmetric(t, 0, 1, 2, 1);  // [x,y] = z
    return AlgebraSpec(n, {"x", "y", "z"}, std::move(t), std::vector<int>{1, 1, 0}, AlgebraClass::lie);
  }
  static const std::regex abelian(R"(abelian\(?(\d+)\)?)");
  std::smatch m;
  if (std::regex_match(n, m, abelian)) {
    const int d = std::stoi(m[1].str());
    if (d < 1 || d > 64) throw Error(ErrorKind::unknown_builtin, "abelian dimension out of range: " + n);
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("b" + std::to_string(i));
    return AlgebraSpec("abelian(" + std::to_string(d) + ")", std::move(names), StructureConstants(d),
                       std::nullopt, AlgebraClass::lie);
  }
  throw Error(ErrorKind::unknown_builtin, "unknown builtin algebra '" + n + "'");
}

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rational parse_rational(const nlohmann::json& v) {
  try {
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
    if (v.is_string()) {
      Rational r(v.get<std::string>());
      r.canonicalize();
      if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator");
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorKind::invalid_algebra, "coefficient " + v.dump() + " is not a rational \"p/q\"");
}

}  // namespace

AlgebraSpec parse_algebra_json(const std::string& text, const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorKind::parse_error, name + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                            ": " + e.what());
  }
  try {
    const int dim = doc.at("dim").get<int>();
    if (dim < 1) throw Error(ErrorKind::invalid_algebra, "dim must be positive");
    std::vector<std::string> basis;
    if (doc.contains("basis")) {
      basis = doc.at("basis").get<std::vector<std::string>>();
    } else {
      for (int i = 1; i <= dim; ++i) basis.push_back("b" + std::to_string(i));
    }
    std::optional<std::vector<int>> grading;
    if (doc.contains("grading") && !doc.at("grading").is_null()) {
      grading = doc.at("grading").get<std::vector<int>>();
    }
    const AlgebraClass cls = algebra_class_from_string(doc.value("class", std::string("lie")));
    const auto& table = doc.at("table");
    if (!table.is_array() || static_cast<int>(table.size()) != dim) {
      throw Error(ErrorKind::invalid_algebra, "table must have dim rows");
    }
    StructureConstants t(dim);
    for (int i = 0; i < dim; ++i) {
      const auto& row = table[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw Error(ErrorKind::invalid_algebra, "table row " + std::to_string(i) + " must have dim entries");
      }
      for (int j = 0; j < dim; ++j) {
        const auto& coeffs = row[static_cast<std::size_t>(j)];
        if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != dim) {
          throw Error(ErrorKind::invalid_algebra, "table[" + std::to_string(i) + "][" + std::to_string(j) +
                                                      "] must list dim coefficients");
        }
        for (int k = 0; k < dim; ++k) t.at(i, j, k) = parse_rational(coeffs[static_cast<std::size_t>(k)]);
      }
    }
    return AlgebraSpec(name, std::move(basis), std::move(t), std::move(grading), cls);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_algebra, name + ": " + e.what());
  }
}

std::string to_json(const AlgebraSpec& a) {
  nlohmann::ordered_json doc;
  doc["dim"] = a.dim();
  doc["basis"] = a.basis_names();
  if (a.grading()) doc["grading"] = *a.grading();
  doc["class"] = std::string(to_string(a.declared_class()));
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < a.dim(); ++j) {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (int k = 0; k < a.dim(); ++k) coeffs.push_back(a.table().at(i, j, k).get_str());
      row.push_back(coeffs);
    }
    table.push_back(row);
  }
  doc["table"] = table;
  return doc.dump();
}

AlgebraSpec load_algebra(const std::string& name_or_path) {
  try {
    return builtin(name_or_path);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::unknown_builtin) throw;
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw Error(ErrorKind::usage, "'" + name_or_path + "' is neither a builtin algebra nor a readable file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str(), name_or_path);
}

}  // namespace pilab::algebras
