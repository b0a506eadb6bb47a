#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cdsw/exactla.hpp"

namespace cdsw {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

/// Outcome of one check. `details` holds ranks, dimensions and constants;
/// wall time lives apart so reports can be compared bit for bit.
struct CheckReport {
  std::string check;
  std::string algebra;
  Verdict verdict = Verdict::Skipped;
  std::string mode = "exact";
  bool probabilistic = false;
  /// Skip reason or a one-line failure summary.
  std::string reason;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Fills `mode` and `probabilistic` from a FieldMode.
void stamp_mode(CheckReport& r, const FieldMode& mode);

/// JSON for one check without its timing.
nlohmann::json to_json(const CheckReport& r);

/// Whole run: {"algebra", "field", "checks": [...], "timing": {...}}.
/// Everything outside "timing" is deterministic for a fixed configuration.
nlohmann::json run_document(const std::string& algebra, const FieldMode& mode,
                            const std::vector<CheckReport>& reports);

/// One line per check, e.g. "PASS  cdsw-ii  A2  S^3 in I".
std::string to_text(const CheckReport& r);

}  // namespace cdsw
