// Command-line front end: `cdsw check A 2 --all`, `cdsw abideals G 2`, ...
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdsw/lie_algebra.hpp"
#include "cdsw/rootsystem.hpp"
#include "cdsw/runner.hpp"

namespace {

using namespace cdsw;

struct AlgebraArgs {
  std::vector<std::string> positional;  // "A" "2"
  std::vector<std::string> algebra;     // --algebra A 2
};

std::pair<char, int> parse_algebra(const AlgebraArgs& a) {
  const auto& v = a.algebra.empty() ? a.positional : a.algebra;
  if (v.size() != 2) throw ConfigError("expected an algebra as <letter> <rank>, e.g. A 2");
  if (v[0].size() != 1) throw ConfigError("algebra type must be a single letter: " + v[0]);
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(v[0][0])));
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(v[1], &used);
    if (used != v[1].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ConfigError("rank must be an integer: " + v[1]);
  }
  return {t, r};
}

FieldMode parse_mode(const std::string& mode, std::uint64_t seed, int primes) {
  if (mode == "exact") return FieldMode::exact();
  if (mode == "modular") return FieldMode::modular(seed, primes);
  throw ConfigError("--mode must be exact or modular, got " + mode);
}

void emit_json(const nlohmann::json& doc, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

void print_text(const RunResult& res, const std::string& json_path) {
  // With --json - stdout carries the document; the summary goes to stderr.
  std::ostream& os = json_path == "-" ? std::cerr : std::cout;
  for (const auto& r : res.reports) os << to_text(r) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for the CDSW superscheme invariants"};
  app.require_subcommand(1);

  AlgebraArgs check_alg;
  std::string checks = "all", mode = "exact", json_path;
  bool all = false, heavy = false;
  std::uint64_t seed = 1;
  int primes = 2;
  std::size_t max_monomials = kDefaultMonomialCap;
  double time_budget = 0;

  auto* check = app.add_subcommand("check", "Run checks on one algebra");
  check->add_option("type_rank", check_alg.positional, "Algebra, e.g. A 2")->expected(2);
  check->add_option("--algebra", check_alg.algebra, "Algebra letter and rank")->expected(2);
  check->add_option("--checks", checks, "Comma-separated checks or 'all'");
  check->add_flag("--all", all, "Run every check");
  check->add_option("--mode", mode, "exact or modular");
  check->add_option("--seed", seed, "Seed for modular prime selection");
  check->add_option("--primes", primes, "Number of primes in modular mode")->check(CLI::Range(2, 8));
  check->add_option("--max-monomials", max_monomials, "Exact-mode component size cap");
  check->add_option("--time-budget", time_budget, "Seconds; later checks are skipped once spent");
  check->add_option("--json", json_path, "Write the JSON report to a path, or - for stdout");
  check->add_flag("--heavy", heavy, "Enable G2 S-power checks (modular mode)");

  AlgebraArgs ab_alg;
  std::string ab_json = "-";
  auto* abideals = app.add_subcommand("abideals", "List abelian ideals and Poincare series as JSON");
  abideals->add_option("type_rank", ab_alg.positional, "Algebra, e.g. G 2")->expected(2);
  abideals->add_option("--algebra", ab_alg.algebra, "Algebra letter and rank")->expected(2);
  abideals->add_option("--json", ab_json, "Output path or -");

  AlgebraArgs ex_alg;
  std::string ex_json = "-";
  auto* exp = app.add_subcommand("export", "Export structure constants and representation matrices");
  exp->add_option("type_rank", ex_alg.positional, "Algebra, e.g. B 2")->expected(2);
  exp->add_option("--algebra", ex_alg.algebra, "Algebra letter and rank")->expected(2);
  exp->add_option("--json", ex_json, "Output path or -");

  std::string prof_mode = "exact", prof_json;
  std::uint64_t prof_seed = 1;
  auto* profile = app.add_subcommand("profile", "Default profile: A1, A2, B2 in full, G2 combinatorics");
  profile->add_option("--mode", prof_mode, "exact or modular");
  profile->add_option("--seed", prof_seed, "Seed for modular prime selection");
  profile->add_option("--json", prof_json, "Write the JSON report to a path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*check) {
      RunConfig cfg;
      std::tie(cfg.type, cfg.rank) = parse_algebra(check_alg);
      cfg.checks = parse_check_list(all ? "all" : checks);
      cfg.mode = parse_mode(mode, seed, primes);
      cfg.max_monomials = max_monomials;
      cfg.time_budget = time_budget;
      cfg.heavy = heavy;
      const RunResult res = run(cfg);
      print_text(res, json_path);
      emit_json(res.document, json_path);
      return res.exit_code;
    }
    if (*abideals) {
      auto [t, r] = parse_algebra(ab_alg);
      emit_json(abelian_ideals_json(t, r), ab_json);
      return kExitOk;
    }
    if (*exp) {
      auto [t, r] = parse_algebra(ex_alg);
      if (!lie_data_supported(t, r)) throw ConfigError("no Lie algebra data for " + std::string(1, t) + std::to_string(r));
      const auto lie = lie_algebra(t, r);
      std::vector<Representation> reps{representation(lie, "adjoint")};
      const std::string def = default_representation_label(lie);
      if (def != "adjoint") reps.insert(reps.begin(), representation(lie, def));
      emit_json(export_json(lie, reps), ex_json);
      return kExitOk;
    }
    if (*profile) {
      const FieldMode fm = parse_mode(prof_mode, prof_seed, 2);
      nlohmann::json docs = nlohmann::json::array();
      int code = kExitOk;
      for (const auto& cfg : default_profile(fm)) {
        const RunResult res = run(cfg);
        print_text(res, prof_json);
        docs.push_back(res.document);
        code = std::max(code, res.exit_code);
      }
      emit_json(docs, prof_json);
      return code;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedType& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource abort: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}
