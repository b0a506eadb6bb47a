#include "cdsw/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <new>
#include <sstream>

#include "cdsw/abideals.hpp"
#include "cdsw/core.hpp"
#include "cdsw/lie_algebra.hpp"
#include "cdsw/rootsystem.hpp"

namespace cdsw {

namespace {

using Clock = std::chrono::steady_clock;

CheckReport skipped(const std::string& check, const std::string& algebra, const FieldMode& mode,
                    const std::string& reason) {
  CheckReport r;
  r.check = check;
  r.algebra = algebra;
  stamp_mode(r, mode);
  r.verdict = Verdict::Skipped;
  r.reason = reason;
  return r;
}

/// Every simple reflection maps a root to a root.
bool closed_under_reflections(const RootSystem& rs) {
  for (const auto& beta : rs.positive_roots)
    for (int i = 0; i < rs.rank; ++i) {
      RootCoords img = beta;
      img[i] -= rs.pairing_with_coroot(beta, i);
      if (!rs.is_root(img)) return false;
    }
  return true;
}

CheckReport check_roots(const RunConfig& cfg) {
  CheckReport r;
  r.check = "roots";
  stamp_mode(r, FieldMode::exact());
  const RootSystem rs = root_system(cfg.type, cfg.rank);
  r.algebra = rs.label();
  bool ok = true;
  std::string first_failure;
  auto require = [&](bool cond, const std::string& what) {
    r.details["checks"][what] = cond;
    if (!cond && first_failure.empty()) first_failure = what;
    ok = ok && cond;
  };
  bool cartan_ok = true;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      const int a = rs.cartan[i][j];
      cartan_ok = cartan_ok && (i == j ? a == 2 : (a <= 0 && a >= -3));
    }
  require(cartan_ok, "cartan_entries");
  bool nonneg = true;
  for (const auto& beta : rs.positive_roots)
    nonneg = nonneg && std::all_of(beta.begin(), beta.end(), [](int c) { return c >= 0; });
  require(nonneg, "positive_roots_nonnegative");
  require(closed_under_reflections(rs), "reflection_closure");
  r.details["num_positive_roots"] = rs.num_positive();
  r.details["coxeter_number"] = coxeter_number(rs);
  r.details["dual_coxeter_number"] = dual_coxeter_number(rs);
  r.details["degrees"] = invariant_degrees(rs);
  r.details["highest_root"] = rs.highest_root();

  if (lie_data_supported(cfg.type, cfg.rank)) {
    const LieAlgebraData lie = chevalley_data(rs);
    r.details["dim"] = lie.dim;
    require(rs.num_positive() == (lie.dim - lie.rank) / 2, "positive_root_count");
    require(antisymmetry_holds(lie), "antisymmetry");
    require(jacobi_holds(lie), "jacobi");
    require(form_invariance_holds(lie), "form_invariance");
    require(adjoint_casimir_is_identity(lie), "adjoint_casimir");
    for (const auto& label : std::vector<std::string>{default_representation_label(lie), "adjoint"}) {
      Representation rep = representation(lie, label);
      require(representation_respects_bracket(lie, rep), "representation_" + label);
    }
  } else {
    r.details["note"] = "combinatorial data only; no Chevalley basis for this type";
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) r.reason = "failed: " + first_failure;
  return r;
}

CheckReport check_abideals(const RunConfig& cfg) {
  CheckReport r;
  r.check = "abideals";
  stamp_mode(r, FieldMode::exact());
  const RootSystem rs = root_system(cfg.type, cfg.rank);
  r.algebra = rs.label();
  const auto ideals = enumerate_abelian_ideals(rs);
  const long long expected = 1LL << rs.rank;
  bool all_valid = std::all_of(ideals.begin(), ideals.end(), [&](const AbelianIdeal& a) { return is_abelian_ideal(rs, a.roots); });
  bool ok = static_cast<long long>(ideals.size()) == expected && all_valid;
  r.details["count"] = ideals.size();
  r.details["expected"] = expected;
  r.details["all_conditions_rechecked"] = all_valid;
  r.details["dimensions"] = poincare_E(ideals);
  if (rs.num_positive() <= 12) {
    const bool agree = enumerate_abelian_ideals_brute_force(rs) == ideals;
    r.details["brute_force_agrees"] = agree;
    ok = ok && agree;
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) r.reason = "found " + std::to_string(ideals.size()) + " abelian ideals, expected " + std::to_string(expected);
  return r;
}

CheckReport check_poincare(const RunConfig& cfg) {
  CheckReport r;
  r.check = "poincare";
  stamp_mode(r, FieldMode::exact());
  const RootSystem rs = root_system(cfg.type, cfg.rank);
  r.algebra = rs.label();
  try {
    CoxReport cox = check_prop_cox(rs, enumerate_abelian_ideals(rs));
    r.details = {{"g", cox.dual_coxeter},
                 {"degrees", cox.degrees},
                 {"product_series", cox.product},
                 {"poincare_E", cox.poincare},
                 {"discrepancy_at_g", cox.discrepancy}};
    r.verdict = cox.pass() ? Verdict::Pass : Verdict::Fail;
    if (!cox.pass()) r.reason = "t^g discrepancy is not positive";
  } catch (const MismatchBelowG& e) {
    r.verdict = Verdict::Fail;
    r.reason = e.what();
    r.details["first_mismatch"] = e.degree();
  }
  return r;
}

bool needs_engine(const std::string& check) {
  return check == "cdsw-i" || check == "cdsw-ii" || check == "cdsw-iii" || check == "prop-hat" ||
         check == "conj-c1" || check == "conj-c23";
}

std::string algebra_label(const RunConfig& cfg) { return std::string(1, cfg.type) + std::to_string(cfg.rank); }

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"roots",   "abideals", "poincare", "cdsw-iii", "cdsw-ii",
                                                 "cdsw-i",  "prop-hat", "conj-c1",  "conj-c23", "sln-remark"};
  return names;
}

std::vector<std::string> parse_check_list(const std::string& list) {
  if (list == "all") return known_checks();
  std::vector<std::string> wanted;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(known_checks().begin(), known_checks().end(), item) == known_checks().end())
      throw ConfigError("unknown check '" + item + "'");
    wanted.push_back(item);
  }
  if (wanted.empty()) throw ConfigError("no checks selected");
  std::vector<std::string> ordered;
  for (const auto& name : known_checks())
    if (std::find(wanted.begin(), wanted.end(), name) != wanted.end()) ordered.push_back(name);
  return ordered;
}

void validate(const RunConfig& config) {
  try {
    root_system(config.type, config.rank);
  } catch (const UnsupportedType& e) {
    throw ConfigError(e.what());
  }
  if (config.checks.empty()) throw ConfigError("no checks selected");
  for (const auto& c : config.checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw ConfigError("unknown check '" + c + "'");
  if (!config.mode.is_exact() && config.mode.primes.size() < 2)
    throw ConfigError("modular mode needs at least two primes");
}

RunResult run(const RunConfig& config) {
  validate(config);
  RunResult result;
  const std::string label = algebra_label(config);
  const auto start = Clock::now();
  std::unique_ptr<Engine> engine;
  std::string engine_error;
  bool engine_tried = false;

  auto get_engine = [&]() -> Engine* {
    if (!engine_tried) {
      engine_tried = true;
      try {
        engine = std::make_unique<Engine>(lie_algebra(config.type, config.rank), config.mode, config.max_monomials);
      } catch (const UnsupportedType& e) {
        engine_error = e.what();
      } catch (const ComponentTooLarge& e) {
        engine_error = e.what();
      }
    }
    return engine.get();
  };

  for (const auto& check : config.checks) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (config.time_budget > 0 && elapsed > config.time_budget) {
      result.reports.push_back(skipped(check, label, config.mode, "time budget exhausted"));
      continue;
    }
    const auto t0 = Clock::now();
    CheckReport rep;
    try {
      if (check == "roots") {
        rep = check_roots(config);
      } else if (check == "abideals") {
        rep = check_abideals(config);
      } else if (check == "poincare") {
        rep = check_poincare(config);
      } else if (check == "sln-remark") {
        if (config.type != 'A' || config.rank > 2)
          rep = skipped(check, label, config.mode, "applies to sl(2) and sl(3) only");
        else
          rep = check_sln_remark(config.rank + 1, config.mode);
        rep.algebra = label;
      } else if (needs_engine(check)) {
        const bool g2 = config.type == 'G';
        const bool g2_heavy_ok = check == "cdsw-ii" || check == "cdsw-iii";
        if (g2 && !(config.heavy && g2_heavy_ok)) {
          rep = skipped(check, label, config.mode,
                        g2_heavy_ok ? "G2 S-power checks need --heavy --mode modular" : "beyond desk scale for G2");
        } else if (g2 && config.mode.is_exact()) {
          rep = skipped(check, label, config.mode, "G2 heavy checks run in modular mode only");
        } else if (!lie_data_supported(config.type, config.rank) || !get_engine()) {
          rep = skipped(check, label, config.mode,
                        engine_error.empty() ? "no Lie algebra data for " + label : engine_error);
        } else {
          Engine& eng = *engine;
          const int g = eng.lie().dual_coxeter;
          if (check == "cdsw-ii") rep = check_cdsw_ii(eng);
          else if (check == "cdsw-iii") rep = check_cdsw_iii(eng);
          else if (check == "cdsw-i") rep = check_part_i(eng, g);
          else if (check == "prop-hat") rep = check_prop_hat_all(eng);
          else if (check == "conj-c1") rep = check_conj_c1(eng, g - 1);
          else rep = check_conj_c2_c3(eng);
        }
      }
    } catch (const ComponentTooLarge& e) {
      rep = skipped(check, label, config.mode, std::string("cap: ") + e.what());
    } catch (const ModularDisagreement& e) {
      rep = skipped(check, label, config.mode, std::string("resource abort: ") + e.what());
      result.exit_code = kExitResource;
    } catch (const std::bad_alloc&) {
      rep = skipped(check, label, config.mode, "resource abort: out of memory");
      result.exit_code = kExitResource;
    }
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    result.reports.push_back(std::move(rep));
  }

  if (result.exit_code == kExitOk)
    for (const auto& r : result.reports)
      if (r.verdict == Verdict::Fail) result.exit_code = kExitFailed;
  result.document = run_document(label, config.mode, result.reports);
  result.document["heavy"] = config.heavy;
  result.document["max_monomials"] = config.max_monomials;
  return result;
}

std::vector<RunConfig> default_profile(const FieldMode& mode) {
  std::vector<RunConfig> out;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    RunConfig c;
    c.type = t;
    c.rank = r;
    c.checks = known_checks();
    c.mode = mode;
    out.push_back(c);
  }
  RunConfig g2;
  g2.type = 'G';
  g2.rank = 2;
  g2.checks = {"roots", "abideals", "poincare"};
  g2.mode = mode;
  out.push_back(g2);
  return out;
}

nlohmann::json abelian_ideals_json(char type, int rank) {
  RootSystem rs;
  try {
    rs = root_system(type, rank);
  } catch (const UnsupportedType& e) {
    throw ConfigError(e.what());
  }
  const auto ideals = enumerate_abelian_ideals(rs);
  nlohmann::json out;
  out["algebra"] = rs.label();
  out["rank"] = rs.rank;
  out["positive_roots"] = rs.positive_roots;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& a : ideals) {
    nlohmann::json coords = nlohmann::json::array();
    for (int i : a.roots) coords.push_back(rs.positive_roots[i]);
    list.push_back({{"roots", a.roots}, {"coordinates", coords}, {"dim", a.dim()}});
  }
  out["ideals"] = list;
  out["count"] = ideals.size();
  out["histogram"] = poincare_E(ideals);
  try {
    CoxReport cox = check_prop_cox(rs, ideals);
    out["poincare_E"] = cox.poincare;
    out["product_series"] = cox.product;
    out["dual_coxeter"] = cox.dual_coxeter;
    out["discrepancy_at_g"] = cox.discrepancy;
  } catch (const MismatchBelowG& e) {
    out["poincare_error"] = e.what();
  }
  return out;
}

}  // namespace cdsw
