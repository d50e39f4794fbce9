#include "pilab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace pilab::report {

using json = nlohmann::ordered_json;

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

namespace {

json parts_json(const codim::Partition& p) {
  json a = json::array();
  for (int x : p.parts()) a.push_back(x);
  return a;
}

json count_json(const Integer& m) {
  if (m.fits_slong_p()) return m.get_si();
  return m.get_str();
}

}  // namespace

std::string to_json(const Report& r) {
  json doc;
  doc["target"] = r.target;
  doc["mode"] = r.mode;
  doc["arithmetic"] = r.arithmetic;
  doc["spanning"] = r.spanning;
  if (r.prime) doc["prime"] = std::to_string(*r.prime);
  doc["seed"] = std::to_string(r.seed);
  doc["verified_exact"] = r.verified;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j;
    j["n"] = row.n;
    j["c_n"] = row.c_n.get_str();
    if (row.c_n_gr) j["c_n_gr"] = row.c_n_gr->get_str();
    if (row.cocharacter) {
      j["l_n"] = row.cocharacter->colength().get_str();
      j["max_d"] = row.cocharacter->max_dimension().get_str();
      json ch = json::array();
      for (const auto& [lambda, m] : row.cocharacter->entries) {
        ch.push_back({{"lambda", parts_json(lambda)}, {"m", count_json(m)}});
      }
      j["cocharacter"] = ch;
    }
    if (!row.graded.empty()) {
      json g = json::array();
      for (const auto& part : row.graded) {
        json pj{{"q", part.q}, {"m", part.m}, {"c", part.c.get_str()}};
        if (part.cocharacter) {
          json ch = json::array();
          for (const auto& [lambda, mu, m] : part.cocharacter->entries) {
            ch.push_back({{"lambda", parts_json(lambda)}, {"mu", parts_json(mu)}, {"m", count_json(m)}});
          }
          pj["cocharacter"] = ch;
        }
        g.push_back(pj);
      }
      j["graded"] = g;
    }
    j["root"] = row.root;
    j["ratio"] = row.ratio;
    if (row.monotonicity_violation) j["monotonicity_violation"] = true;
    rows.push_back(j);
  }
  doc["rows"] = rows;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  doc["checks"] = checks;
  if (!r.notes.empty()) {
    json notes = json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    doc["notes"] = notes;
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "n,c_n,c_n_gr,l_n,max_d,root,ratio\n";
  for (const auto& row : r.rows) {
    out << row.n << ',' << row.c_n.get_str() << ',' << (row.c_n_gr ? row.c_n_gr->get_str() : "") << ','
        << (row.cocharacter ? row.cocharacter->colength().get_str() : "") << ','
        << (row.cocharacter ? row.cocharacter->max_dimension().get_str() : "") << ',' << row.root << ','
        << row.ratio << '\n';
  }
  return out.str();
}

namespace {

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

template <class Entry, class Key>
std::string top_entries(std::vector<Entry> entries, Key key) {
  std::stable_sort(entries.begin(), entries.end(),
                   [&](const Entry& a, const Entry& b) { return key(a).second > key(b).second; });
  std::string s;
  const std::size_t shown = std::min<std::size_t>(entries.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto [label, m] = key(entries[i]);
    if (!s.empty()) s += ' ';
    s += label + ":" + m.get_str();
  }
  if (entries.size() > shown) s += " ... (" + std::to_string(entries.size() - shown) + " more)";
  return s;
}

}  // namespace

std::string to_table(const Report& r) {
  std::ostringstream out;
  out << "target " << r.target << ", mode " << r.mode << ", arithmetic " << r.arithmetic;
  if (r.prime) out << " (p = " << *r.prime << (r.verified ? ", verified exact" : "") << ")";
  out << ", spanning " << r.spanning << "\n";
  out << pad("n", 3) << pad("c_n", 14) << pad("c_n^gr", 14) << pad("l_n", 8) << pad("max d", 10)
      << pad("root", 11) << pad("ratio", 11) << pad("sec", 9) << "\n";
  for (const auto& row : r.rows) {
    std::string secs;
    for (const auto& [n, t] : r.timings) {
      if (n == row.n) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", t);
        secs = buf;
      }
    }
    out << pad(std::to_string(row.n), 3) << pad(row.c_n.get_str(), 14)
        << pad(row.c_n_gr ? row.c_n_gr->get_str() : "-", 14)
        << pad(row.cocharacter ? row.cocharacter->colength().get_str() : "-", 8)
        << pad(row.cocharacter ? row.cocharacter->max_dimension().get_str() : "-", 10) << pad(row.root, 11)
        << pad(row.ratio.empty() ? "-" : row.ratio, 11) << pad(secs, 9)
        << (row.monotonicity_violation ? "  decreasing" : "") << "\n";
  }
  for (const auto& row : r.rows) {
    if (row.cocharacter && !row.cocharacter->entries.empty()) {
      out << "  n=" << row.n << ": "
          << top_entries(row.cocharacter->entries,
                         [](const auto& e) { return std::make_pair(e.first.to_string(), e.second); })
          << "\n";
    }
    for (const auto& part : row.graded) {
      if (!part.cocharacter || part.cocharacter->entries.empty()) continue;
      out << "  (q,m)=(" << part.q << "," << part.m << "): "
          << top_entries(part.cocharacter->entries,
                         [](const auto& e) {
                           return std::make_pair(std::get<0>(e).to_string() + "x" + std::get<1>(e).to_string(),
                                                 std::get<2>(e));
                         })
          << "\n";
    }
  }
  for (const auto& [k, v] : r.notes) out << k << ": " << v << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace pilab::report
