#ifndef PILAB_REPORT_HPP
#define PILAB_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pilab/codim.hpp"

namespace pilab::report {

using codim::Integer;

struct GradedPart {
  int q = 0;
  int m = 0;
  Integer c;
  std::optional<codim::GradedCocharacter> cocharacter;
};

struct Row {
  int n = 0;
  Integer c_n;
  std::optional<Integer> c_n_gr;
  std::optional<codim::Cocharacter> cocharacter;
  std::vector<GradedPart> graded;
  std::string root;
  std::string ratio;
  bool monotonicity_violation = false;
};

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Everything that goes into the JSON is a deterministic function of the
/// run configuration; timings are kept separately.
struct Report {
  std::string target;
  std::string mode;
  std::string arithmetic;
  std::string spanning;
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 0;
  bool verified = false;
  std::vector<Row> rows;
  std::vector<CheckEntry> checks;
  /// Free-form key/value annotations such as reference lines.
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<std::pair<int, double>> timings;  // n -> seconds; table output only

  bool all_pass() const;
};

std::string to_json(const Report& r);
std::string to_csv(const Report& r);
/// Human table; decompositions truncated to the 10 largest multiplicities.
std::string to_table(const Report& r);

}  // namespace pilab::report

#endif  // PILAB_REPORT_HPP
