#include "cdsw/abideals.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace cdsw {

namespace {

RootCoords add(const RootCoords& a, const RootCoords& b) {
  RootCoords s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

}  // namespace

MismatchBelowG::MismatchBelowG(int degree, long long expected, long long found)
    : std::runtime_error("Poincare series disagree at t^" + std::to_string(degree) + ": product gives " +
                         std::to_string(expected) + ", ideals give " + std::to_string(found)),
      degree_(degree) {}

bool is_abelian_ideal(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<bool> in(rs.num_positive(), false);
  for (int r : roots) in[r] = true;
  for (int a : roots) {
    for (int b = 0; b < rs.num_positive(); ++b) {
      auto sum = rs.find_positive(add(rs.positive_roots[a], rs.positive_roots[b]));
      if (sum && !in[*sum]) return false;
    }
    for (int b : roots)
      if (rs.is_root(add(rs.positive_roots[a], rs.positive_roots[b]))) return false;
  }
  return true;
}

std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs) {
  const int npos = rs.num_positive();
  const int r = rs.rank;
  // Decreasing height: every root's upper covers alpha + alpha_i are decided first.
  std::vector<int> order(npos);
  for (int i = 0; i < npos; ++i) order[i] = npos - 1 - i;

  std::vector<std::vector<int>> covers(npos);
  std::vector<std::vector<bool>> sums_to_root(npos, std::vector<bool>(npos, false));
  for (int a = 0; a < npos; ++a) {
    for (int i = 0; i < r; ++i)
      if (auto up = rs.find_positive(add(rs.positive_roots[a], rs.positive_roots[i]))) covers[a].push_back(*up);
    for (int b = 0; b < npos; ++b) sums_to_root[a][b] = rs.is_root(add(rs.positive_roots[a], rs.positive_roots[b]));
  }

  std::vector<AbelianIdeal> out;
  std::vector<bool> in(npos, false);
  std::vector<int> chosen;
  std::function<void(int)> dfs = [&](int pos) {
    if (pos == npos) {
      AbelianIdeal ideal{chosen};
      std::sort(ideal.roots.begin(), ideal.roots.end());
      out.push_back(std::move(ideal));
      return;
    }
    const int a = order[pos];
    dfs(pos + 1);
    bool ok = std::all_of(covers[a].begin(), covers[a].end(), [&](int c) { return in[c]; }) && !sums_to_root[a][a];
    for (int c : chosen) ok = ok && !sums_to_root[a][c];
    if (!ok) return;
    in[a] = true;
    chosen.push_back(a);
    dfs(pos + 1);
    chosen.pop_back();
    in[a] = false;
  };
  dfs(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AbelianIdeal> enumerate_abelian_ideals_brute_force(const RootSystem& rs) {
  const int npos = rs.num_positive();
  if (npos > 20) throw std::invalid_argument("brute-force enumeration limited to 20 positive roots");
  std::vector<AbelianIdeal> out;
  for (std::uint32_t mask = 0; mask < (1u << npos); ++mask) {
    std::vector<int> roots;
    for (int i = 0; i < npos; ++i)
      if (mask >> i & 1) roots.push_back(i);
    if (is_abelian_ideal(rs, roots)) out.push_back(AbelianIdeal{roots});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PoincareSeries poincare_E(const std::vector<AbelianIdeal>& ideals) {
  PoincareSeries c;
  for (const auto& a : ideals) {
    if (static_cast<int>(c.size()) <= a.dim()) c.resize(a.dim() + 1, 0);
    ++c[a.dim()];
  }
  return c;
}

PoincareSeries degree_product_series(const std::vector<int>& degrees, int order) {
  PoincareSeries s(order + 1, 0);
  s[0] = 1;
  for (int d : degrees) {
    const int step = d - 1;
    if (step <= 0) throw std::invalid_argument("invariant degree must be at least 2");
    // Multiply by 1 / (1 - t^step).
    for (int k = step; k <= order; ++k) s[k] += s[k - step];
  }
  return s;
}

CoxReport check_prop_cox(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals) {
  CoxReport rep;
  rep.dual_coxeter = dual_coxeter_number(rs);
  rep.degrees = invariant_degrees(rs);
  const int g = rep.dual_coxeter;
  rep.product = degree_product_series(rep.degrees, g);
  rep.poincare = poincare_E(ideals);
  rep.poincare.resize(std::max<std::size_t>(rep.poincare.size(), g + 1), 0);
  for (int k = 0; k < g; ++k)
    if (rep.product[k] != rep.poincare[k]) throw MismatchBelowG(k, rep.product[k], rep.poincare[k]);
  rep.discrepancy = rep.product[g] - rep.poincare[g];
  return rep;
}

ExtElement highest_weight_vector(const AbelianIdeal& ideal, const LieAlgebraData& lie) {
  if (ideal.roots.empty()) throw EmptyIdeal("the empty ideal has no highest weight vector; it contributes 1");
  GeneratorLayout layout{lie.dim};
  Monomial m = 0;
  for (int r : ideal.roots) m |= layout.x(lie.e_index(r));
  return ExtElement::monomial(lie.dim, m);
}

}  // namespace cdsw
