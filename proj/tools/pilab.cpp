// pilab: codimensions and cocharacters of graded Lie algebras and their
// Grassmann envelopes.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <omp.h>

#include "pilab/runner.hpp"

namespace {

using pilab::Error;
using pilab::ErrorKind;
using pilab::runner::RunConfig;

struct Options {
  std::string algebra = "metabelian";
  std::string target;
  std::string mode = "ordinary";
  std::string range = "2..6";
  std::string arith = "auto";
  std::string spanning;
  std::string out;
  std::string format;
  std::string suite;
  std::string hook;
  int jobs = 0;
  bool verify_exact = false;
  bool allow_large = false;
  bool quiet = false;
  std::uint64_t seed = 20240229;
  int trials = 500;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::internal_inconsistency: return 2;
    case ErrorKind::budget_exceeded: return 3;
    default: return 1;
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(ErrorKind::usage, "--n expects N or A..B, got '" + s + "'");
  const int a = std::stoi(m[1]);
  const int b = m[2].matched ? std::stoi(m[2]) : a;
  if (a < 1 || b < a) throw Error(ErrorKind::usage, "empty degree range '" + s + "'");
  return {a, b};
}

pilab::partitions::HookSpec parse_hook(const std::string& s) {
  static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(ErrorKind::usage, "--hook expects k,l, got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

RunConfig make_config(const Options& o) {
  RunConfig c;
  c.algebra = o.algebra;
  if (o.mode != "ordinary" && o.mode != "graded" && o.mode != "envelope" && o.mode != "envelope-graded") {
    throw Error(ErrorKind::usage, "unknown mode '" + o.mode + "'");
  }
  c.graded = o.mode == "graded" || o.mode == "envelope-graded";
  const bool envelope_mode = o.mode.starts_with("envelope");
  if (o.target.empty()) {
    c.target = envelope_mode ? pilab::codim::TargetKind::envelope : pilab::codim::TargetKind::algebra;
  } else if (o.target == "algebra" || o.target == "envelope") {
    c.target = o.target == "envelope" ? pilab::codim::TargetKind::envelope : pilab::codim::TargetKind::algebra;
    if (envelope_mode && c.target != pilab::codim::TargetKind::envelope) {
      throw Error(ErrorKind::usage, "--mode " + o.mode + " conflicts with --target algebra");
    }
  } else {
    throw Error(ErrorKind::usage, "--target must be algebra or envelope");
  }
  std::tie(c.n_from, c.n_to) = parse_range(o.range);
  c.arithmetic = pilab::codim::arithmetic_from_string(o.arith);
  if (o.verify_exact) c.arithmetic = pilab::codim::Arithmetic::modular_verified;
  if (!o.spanning.empty()) c.spanning = pilab::freealg::spanning_kind_from_string(o.spanning);
  if (o.jobs == 1) {
    c.policy = pilab::ExecPolicy::serial;
  } else if (o.jobs > 1) {
    omp_set_num_threads(o.jobs);
  }
  c.seed = o.seed;
  c.allow_large = o.allow_large;
  c.trials = o.trials;
  if (!o.hook.empty()) c.hook = parse_hook(o.hook);
  if (const char* mb = std::getenv("PILAB_BUDGET_MB")) {
    char* end = nullptr;
    const double v = std::strtod(mb, &end);
    if (end == mb || *end != '\0' || v <= 0) throw Error(ErrorKind::usage, "PILAB_BUDGET_MB must be a positive number");
    c.budget_bytes = static_cast<std::size_t>(v * 1024 * 1024);
  }
  if (!o.quiet) c.log = [](const std::string& s) { std::cerr << s << "\n"; };
  return c;
}

void emit(const Options& o, const pilab::report::Report& r) {
  std::string format = o.format.empty() ? (o.out.empty() ? "table" : "json") : o.format;
  std::string body;
  if (format == "json") {
    body = pilab::report::to_json(r);
  } else if (format == "csv") {
    body = pilab::report::to_csv(r);
  } else if (format == "table") {
    body = pilab::report::to_table(r);
  } else {
    throw Error(ErrorKind::usage, "--format must be json, csv or table");
  }
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!(f << body)) throw Error(ErrorKind::usage, "cannot write " + o.out);
  if (format != "table") std::cout << pilab::report::to_table(r);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--algebra", o.algebra, "builtin name or JSON file");
  cmd->add_option("--target", o.target, "algebra | envelope");
  cmd->add_option("--mode", o.mode, "ordinary | graded | envelope | envelope-graded");
  cmd->add_option("--n", o.range, "degree N or range A..B");
  cmd->add_option("--arith", o.arith, "auto | exact | modular | modular-verified");
  cmd->add_option("--spanning", o.spanning, "left-normed | all-bracketings");
  cmd->add_option("--out", o.out, "report file");
  cmd->add_option("--format", o.format, "json | csv | table");
  cmd->add_option("--jobs", o.jobs, "worker threads; 1 runs the serial kernels");
  cmd->add_flag("--verify-exact", o.verify_exact, "recompute modular results over Q");
  cmd->add_option("--seed", o.seed, "seed for the prime and random checks");
  cmd->add_flag("--allow-large", o.allow_large, "run past the default degree budget");
  cmd->add_flag("--quiet", o.quiet, "no progress lines on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pilab: codimensions of graded Lie algebras and Grassmann envelopes"};
  app.require_subcommand(1);
  Options o;
  auto* codim = app.add_subcommand("codim", "codimensions and cocharacters");
  add_common(codim, o);
  auto* check = app.add_subcommand("check", "run a check suite");
  add_common(check, o);
  check->add_option("--suite", o.suite, "hooks | duality | tilde | bounds | oracle")->required();
  check->add_option("--trials", o.trials, "random polynomials for the tilde suite");
  auto* exponent = app.add_subcommand("exponent", "n-th root trend of c_n");
  add_common(exponent, o);
  exponent->add_option("--hook", o.hook, "k,l: trend of d_{h(k,l,d)} instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const RunConfig config = make_config(o);
    pilab::report::Report r;
    if (codim->parsed()) r = pilab::runner::run_codim(config);
    if (check->parsed()) r = pilab::runner::run_check(config, o.suite);
    if (exponent->parsed()) r = pilab::runner::run_exponent(config);
    emit(o, r);
    return r.all_pass() ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error (" << pilab::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
