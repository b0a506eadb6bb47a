#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdsw/exactla.hpp"
#include "cdsw/report.hpp"

namespace cdsw {

/// Bad flags, unknown checks or unsupported algebras; raised before any computation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode : int {
  kExitOk = 0,        // every check passed or was skipped
  kExitFailed = 1,    // some check failed
  kExitConfig = 2,    // configuration error
  kExitResource = 3,  // a computation aborted (primes disagreed, out of memory)
};

struct RunConfig {
  char type = 'A';
  int rank = 2;
  std::vector<std::string> checks;
  FieldMode mode = FieldMode::exact();
  std::size_t max_monomials = kDefaultMonomialCap;
  /// Seconds; checks starting after the budget is spent are skipped. 0 = none.
  double time_budget = 0;
  /// Enables the G2 S-power checks (modular mode only).
  bool heavy = false;
};

/// Check names in execution order.
const std::vector<std::string>& known_checks();

/// "all" or a comma-separated list; throws ConfigError on unknown names.
/// The result follows execution order and has no duplicates.
std::vector<std::string> parse_check_list(const std::string& list);

/// Throws ConfigError if the algebra or check list is invalid.
void validate(const RunConfig& config);

struct RunResult {
  std::vector<CheckReport> reports;
  int exit_code = kExitOk;
  nlohmann::json document;
};

/// Validates, then runs the requested checks in dependency order.
RunResult run(const RunConfig& config);

/// The default profile: A1, A2, B2 with every check, G2 combinatorics only.
std::vector<RunConfig> default_profile(const FieldMode& mode);

/// JSON listing of the abelian ideals of a root system: root index sets,
/// root coordinates, dimension histogram and both Poincare series.
nlohmann::json abelian_ideals_json(char type, int rank);

}  // namespace cdsw
