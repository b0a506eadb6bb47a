#include "cdsw/report.hpp"

#include <cstdio>

namespace cdsw {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

void stamp_mode(CheckReport& r, const FieldMode& mode) {
  r.mode = mode.name();
  r.probabilistic = mode.probabilistic();
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["algebra"] = r.algebra;
  j["verdict"] = to_string(r.verdict);
  j["mode"] = r.mode;
  j["probabilistic"] = r.probabilistic;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["details"] = r.details;
  return j;
}

nlohmann::json run_document(const std::string& algebra, const FieldMode& mode,
                            const std::vector<CheckReport>& reports) {
  nlohmann::json doc;
  doc["algebra"] = algebra;
  doc["field"] = {{"mode", mode.name()}, {"probabilistic", mode.probabilistic()}};
  if (!mode.is_exact()) {
    doc["field"]["seed"] = mode.seed;
    doc["field"]["primes"] = mode.primes;
  }
  doc["checks"] = nlohmann::json::array();
  nlohmann::json timing = nlohmann::json::object();
  for (const auto& r : reports) {
    doc["checks"].push_back(to_json(r));
    timing[r.check] = r.seconds;
  }
  doc["timing"] = timing;
  return doc;
}

std::string to_text(const CheckReport& r) {
  std::string tag = r.verdict == Verdict::Pass ? "PASS" : r.verdict == Verdict::Fail ? "FAIL" : "SKIP";
  char time_buf[32];
  std::snprintf(time_buf, sizeof time_buf, "%.2fs", r.seconds);
  std::string line = tag + "  " + r.check + "  " + r.algebra + "  [" + r.mode + "] " + time_buf;
  if (!r.reason.empty()) line += "  " + r.reason;
  return line;
}

}  // namespace cdsw
