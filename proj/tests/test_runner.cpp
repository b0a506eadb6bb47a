#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cdsw/runner.hpp"

using namespace cdsw;

namespace {

nlohmann::json without_timing(nlohmann::json doc) {
  doc.erase("timing");
  return doc;
}

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(CDSW_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

RunConfig config(char t, int r, const std::string& checks = "all") {
  RunConfig c;
  c.type = t;
  c.rank = r;
  c.checks = parse_check_list(checks);
  return c;
}

}  // namespace

TEST_CASE("check list parsing") {
  CHECK(parse_check_list("all") == known_checks());
  CHECK(parse_check_list("cdsw-ii,roots,roots") == std::vector<std::string>{"roots", "cdsw-ii"});
  CHECK_THROWS_AS(parse_check_list("nosuch"), ConfigError);
  CHECK_THROWS_AS(parse_check_list(""), ConfigError);
}

TEST_CASE("configuration errors are raised before computing") {
  CHECK_THROWS_AS(run(config('Q', 2, "roots")), ConfigError);
  CHECK_THROWS_AS(run(config('D', 2, "roots")), ConfigError);
}

TEST_CASE("sl(2) and sl(3) reports match the golden files bit for bit") {
  for (auto [t, r, file] : std::vector<std::tuple<char, int, std::string>>{{'A', 1, "A1_exact.json"},
                                                                          {'A', 2, "A2_exact.json"}}) {
    CAPTURE(file);
    const RunResult res = run(config(t, r));
    CHECK(res.exit_code == kExitOk);
    CHECK(without_timing(res.document) == golden(file));
  }
}

TEST_CASE("identical configurations give identical documents") {
  const auto a = run(config('B', 2, "roots,abideals,poincare,cdsw-iii"));
  const auto b = run(config('B', 2, "roots,abideals,poincare,cdsw-iii"));
  CHECK(without_timing(a.document).dump() == without_timing(b.document).dump());
  CHECK(a.document.contains("timing"));
}

TEST_CASE("monomial cap produces skipped, not failure") {
  RunConfig c = config('B', 2, "cdsw-ii,cdsw-i");
  c.max_monomials = 50;
  const RunResult res = run(c);
  CHECK(res.exit_code == kExitOk);
  for (const auto& r : res.reports) CHECK(r.verdict == Verdict::Skipped);
}

TEST_CASE("modular runs are marked probabilistic and log their primes") {
  RunConfig c = config('A', 1, "cdsw-ii");
  c.mode = FieldMode::modular(12, 2);
  const RunResult res = run(c);
  CHECK(res.reports[0].passed());
  CHECK(res.reports[0].probabilistic);
  CHECK(res.document["field"]["primes"].size() == 2);
  CHECK(res.document["field"]["seed"] == 12);
}

TEST_CASE("G2: combinatorics run, engine checks skipped without --heavy") {
  const RunResult res = run(config('G', 2));
  CHECK(res.exit_code == kExitOk);
  int passed = 0;
  for (const auto& r : res.reports) passed += r.passed();
  CHECK(passed == 3);
}

TEST_CASE("abelian ideal listing") {
  const auto doc = abelian_ideals_json('G', 2);
  CHECK(doc["count"] == 4);
  CHECK(doc["histogram"] == std::vector<long long>{1, 1, 1, 1});
  CHECK_THROWS_AS(abelian_ideals_json('Z', 1), ConfigError);
}

TEST_CASE("text report lines") {
  CheckReport r;
  r.check = "roots";
  r.algebra = "A1";
  r.verdict = Verdict::Pass;
  CHECK(to_text(r).rfind("PASS  roots  A1", 0) == 0);
  CHECK(to_string(Verdict::Skipped) == "skipped");
}
