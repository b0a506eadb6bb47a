// One PASS/FAIL line per acceptance criterion, with wall-time limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cdsw/abideals.hpp"
#include "cdsw/core.hpp"
#include "cdsw/runner.hpp"

using namespace cdsw;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

std::string alg(char t, int r) { return std::string(1, t) + std::to_string(r); }

Outcome peterson() {
  Outcome o;
  const std::vector<std::pair<char, int>> list = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'B', 2},
                                                  {'B', 3}, {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4},
                                                  {'D', 5}, {'F', 4}, {'G', 2}, {'E', 6}};
  for (auto [t, r] : list) {
    const auto n = enumerate_abelian_ideals(root_system(t, r)).size();
    o.require(n == (std::size_t{1} << r), alg(t, r) + " has " + std::to_string(n));
  }
  o.note = o.ok ? std::to_string(list.size()) + " root systems" : o.note;
  return o;
}

Outcome prop_cox() {
  Outcome o;
  const std::vector<std::pair<char, int>> list = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                                  {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}};
  std::ostringstream disc;
  for (auto [t, r] : list) {
    const auto rs = root_system(t, r);
    try {
      const CoxReport c = check_prop_cox(rs, enumerate_abelian_ideals(rs));
      o.require(c.pass(), alg(t, r) + " discrepancy " + std::to_string(c.discrepancy));
      disc << alg(t, r) << ":" << c.discrepancy << " ";
    } catch (const MismatchBelowG& e) {
      o.require(false, alg(t, r) + ": " + e.what());
    }
  }
  if (o.ok) o.note = "t^g discrepancies " + disc.str();
  return o;
}

Outcome s_powers() {
  Outcome o;
  struct Case {
    char t;
    int r;
    double limit;
  };
  std::ostringstream times;
  for (const Case& c : std::vector<Case>{{'A', 1, 1}, {'A', 2, 60}, {'B', 2, 600}, {'C', 2, 600}}) {
    const auto t0 = Clock::now();
    Engine eng(lie_algebra(c.t, c.r));
    const bool ii = check_cdsw_ii(eng).passed(), iii = check_cdsw_iii(eng).passed();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(ii, alg(c.t, c.r) + " S^g not in I");
    o.require(iii, alg(c.t, c.r) + " S^(g-1) in I");
    o.require(s < c.limit, alg(c.t, c.r) + " over time");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %.2fs ", alg(c.t, c.r).c_str(), s);
    times << buf;
  }
  // G2 in modular mode with two primes.
  const auto t0 = Clock::now();
  Engine g2(lie_algebra('G', 2), FieldMode::modular(1, 2));
  const bool ii = check_cdsw_ii(g2).passed(), iii = check_cdsw_iii(g2).passed();
  o.require(ii && iii, "G2 modular");
  char buf[64];
  std::snprintf(buf, sizeof buf, "G2[modular] %.2fs", std::chrono::duration<double>(Clock::now() - t0).count());
  times << buf;
  if (o.ok) o.note = times.str();
  return o;
}

template <class F>
Outcome per_algebra(const std::vector<std::pair<char, int>>& list, F&& f) {
  Outcome o;
  for (auto [t, r] : list) {
    Engine eng(lie_algebra(t, r));
    const CheckReport rep = f(eng);
    o.require(rep.passed(), alg(t, r) + ": " + rep.reason);
  }
  return o;
}

Outcome part_i() {
  return per_algebra({{'A', 1}, {'A', 2}}, [](Engine& e) { return check_part_i(e, e.lie().dual_coxeter); });
}

Outcome prop_hat() {
  Outcome o = per_algebra({{'A', 1}, {'A', 2}}, [](Engine& e) { return check_prop_hat_all(e); });
  // The literal "zero ExtElement" reading: count pairs where hat(FH) vanishes in R itself.
  int zero_in_r = 0, pairs = 0;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}}) {
    Engine eng(lie_algebra(t, r));
    const auto deg = trace_degrees(eng.lie());
    for (int k1 : deg)
      for (int k2 : deg) {
        if (k2 < k1) continue;
        ++pairs;
        zero_in_r += check_prop_hat(eng, k1, k2).hat_product_is_zero;
      }
  }
  if (o.ok)
    o.note = "zero in B(x)B, i.e. modulo (XX, YY); zero in the free algebra for " + std::to_string(zero_in_r) + "/" +
             std::to_string(pairs) + " pairs";
  return o;
}

Outcome conj_c1() {
  return per_algebra({{'A', 1}, {'A', 2}}, [](Engine& e) { return check_conj_c1(e, e.lie().dual_coxeter - 1); });
}

Outcome conj_c23() {
  return per_algebra({{'A', 1}, {'A', 2}}, [](Engine& e) { return check_conj_c2_c3(e); });
}

Outcome sln_remark() {
  Outcome o;
  for (int n : {2, 3}) {
    const CheckReport r = check_sln_remark(n);
    o.require(r.passed(), "n=" + std::to_string(n) + ": " + r.reason);
  }
  return o;
}

Outcome structure() {
  Outcome o;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    const std::string a = alg(t, r);
    const auto lie = lie_algebra(t, r);
    o.require(jacobi_holds(lie), a + " Jacobi");
    o.require(antisymmetry_holds(lie), a + " antisymmetry");
    o.require(form_invariance_holds(lie), a + " invariance");
    o.require(adjoint_casimir_is_identity(lie), a + " adjoint Casimir");
    const LieModule mod(lie);
    const int n = lie.dim;
    // Exhaustive over the action index and all pairs of generators.
    bool leibniz = true, commute = true;
    for (int e = 0; e < n; ++e)
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
          const auto u = ExtElement::monomial(n, Monomial{1} << i), v = ExtElement::monomial(n, Monomial{1} << j);
          leibniz = leibniz && mod.act(e, u * v) == mod.act(e, u) * v + u * mod.act(e, v);
          if (j == i + 1 || (i == 0 && j < n))
            commute = commute && mod.casimir(mod.act(e, u * v)) == mod.act(e, mod.casimir(u * v));
        }
    o.require(leibniz, a + " Leibniz");
    o.require(commute, a + " Casimir commutation");
    for (const auto& ideal : enumerate_abelian_ideals(lie.roots)) {
      if (ideal.dim() == 0) continue;  // v_0 = 1, trivially invariant
      const ExtElement v = highest_weight_vector(ideal, lie);
      o.require(mod.casimir(v) == v * Rational(ideal.dim()), a + " Casimir eigenvalue on v_a");
      for (int i = 0; i < lie.rank; ++i) o.require(mod.act(lie.e_index(i), v).is_zero(), a + " e_i v_a != 0");
    }
  }
  return o;
}

Outcome oracles() {
  Outcome o;
  int systems = 0;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 2},
                                                        {'C', 3}, {'G', 2}}) {
    const auto rs = root_system(t, r);
    o.require(enumerate_abelian_ideals(rs) == enumerate_abelian_ideals_brute_force(rs), alg(t, r) + " DFS vs brute");
    ++systems;
  }
  int compared = 0;
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    RunConfig ex;
    ex.type = t;
    ex.rank = r;
    ex.checks = known_checks();
    RunConfig mo = ex;
    mo.mode = FieldMode::modular(2718, 2);
    const RunResult a = run(ex), b = run(mo);
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
      o.require(a.reports[i].verdict == b.reports[i].verdict, alg(t, r) + " " + a.reports[i].check + " verdicts differ");
      ++compared;
    }
  }
  if (o.ok)
    o.note = std::to_string(systems) + " root systems vs brute force, " + std::to_string(compared) +
             " exact/modular verdict pairs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Peterson count 2^rank", 5, peterson},
      {2, "Prop. cox modulo t^g with positive discrepancy", 5, prop_cox},
      {3, "CDSW (ii)/(iii) S-power vanishing", 0, s_powers},
      {4, "CDSW (i) invariant dimensions", 0, part_i},
      {5, "Prop. hat identities", 60, prop_hat},
      {6, "Conjecture c1 instance", 0, conj_c1},
      {7, "Conjecture c2/c3 instance", 0, conj_c23},
      {8, "sl(n) Newton remark, n = 2, 3", 300, sln_remark},
      {9, "structural property suite", 60, structure},
      {10, "oracle agreement", 0, oracles},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit > 0 && s > c.limit) o.require(false, "time limit " + std::to_string(c.limit) + "s exceeded");
    failures += !o.ok;
    std::printf("%s  criterion %2d  %-48s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
