#include "cdsw/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cdsw {

namespace {

using Vec = std::vector<Rational>;

Vec unit_vec(int dim, int i, Rational s = 1) {
  Vec v(dim);
  v[i] = s;
  return v;
}

Vec diff_vec(int dim, int i, int j) {
  Vec v(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<Vec> e8_simple_roots() {
  const Rational half = make_rational(1, 2);
  std::vector<Vec> roots;
  Vec a1(8, -half);
  a1[0] = half;
  a1[7] = half;
  roots.push_back(a1);
  Vec a2(8);
  a2[0] = 1;
  a2[1] = 1;
  roots.push_back(a2);
  for (int i = 1; i <= 6; ++i) roots.push_back(diff_vec(8, i, i - 1));
  return roots;
}

std::vector<Vec> simple_roots_for(char type, int rank) {
  std::vector<Vec> roots;
  switch (type) {
    case 'A':
      for (int i = 0; i < rank; ++i) roots.push_back(diff_vec(rank + 1, i, i + 1));
      break;
    case 'B':
      for (int i = 0; i + 1 < rank; ++i) roots.push_back(diff_vec(rank, i, i + 1));
      roots.push_back(unit_vec(rank, rank - 1));
      break;
    case 'C':
      for (int i = 0; i + 1 < rank; ++i) roots.push_back(diff_vec(rank, i, i + 1));
      roots.push_back(unit_vec(rank, rank - 1, 2));
      break;
    case 'D': {
      for (int i = 0; i + 1 < rank; ++i) roots.push_back(diff_vec(rank, i, i + 1));
      Vec last(rank);
      last[rank - 2] = 1;
      last[rank - 1] = 1;
      roots.push_back(last);
      break;
    }
    case 'E': {
      auto all = e8_simple_roots();
      roots.assign(all.begin(), all.begin() + rank);
      break;
    }
    case 'F': {
      const Rational half = make_rational(1, 2);
      roots.push_back(diff_vec(4, 1, 2));
      roots.push_back(diff_vec(4, 2, 3));
      roots.push_back(unit_vec(4, 3));
      roots.push_back(Vec{half, -half, -half, -half});
      break;
    }
    case 'G':
      roots.push_back(Vec{1, -1, 0});
      roots.push_back(Vec{-2, 1, 1});
      break;
    default:
      break;
  }
  return roots;
}

bool combinatorially_supported(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= 8;
    case 'B':
    case 'C': return rank >= 2 && rank <= 8;
    case 'D': return rank >= 4 && rank <= 8;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::optional<int> RootSystem::find_positive(const RootCoords& coords) const {
  // Roots are few (at most 120); a linear scan keeps the type a plain aggregate.
  for (int i = 0; i < num_positive(); ++i)
    if (positive_roots[i] == coords) return i;
  return std::nullopt;
}

bool RootSystem::is_root(const RootCoords& coords) const {
  if (find_positive(coords)) return true;
  RootCoords neg(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  return find_positive(neg).has_value();
}

int RootSystem::height(int root_index) const {
  const auto& c = positive_roots.at(root_index);
  return std::accumulate(c.begin(), c.end(), 0);
}

Rational RootSystem::inner(const RootCoords& beta, const RootCoords& gamma) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (beta[i] != 0 && gamma[j] != 0) s += beta[i] * gamma[j] * gram[i][j];
  return s;
}

int RootSystem::pairing_with_coroot(const RootCoords& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += beta[j] * cartan[j][i];
  return s;
}

RootSystem root_system(char type, int rank) {
  if (!combinatorially_supported(type, rank))
    throw UnsupportedType("unsupported root system " + std::string(1, type) + std::to_string(rank));
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.simple_roots = simple_roots_for(type, rank);
  rs.gram.assign(rank, std::vector<Rational>(rank));
  rs.cartan.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational a = 2 * rs.gram[i][j] / rs.gram[j][j];
      rs.cartan[i][j] = static_cast<int>(a.get_num().get_si());
    }

  // Grow the positive roots level by level with alpha_i-strings:
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
  std::set<RootCoords> known;
  std::vector<RootCoords> level;
  for (int i = 0; i < rank; ++i) {
    RootCoords c(rank, 0);
    c[i] = 1;
    level.push_back(c);
    known.insert(c);
  }
  std::vector<RootCoords> all = level;
  while (!level.empty()) {
    std::vector<RootCoords> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank; ++i) {
        RootCoords up = beta;
        ++up[i];
        if (known.count(up)) continue;
        int p = 0;
        RootCoords down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - rs.pairing_with_coroot(beta, i) > 0) {
          known.insert(up);
          next.push_back(up);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.positive_roots = std::move(all);
  return rs;
}

bool lie_data_supported(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= 4;
    case 'B':
    case 'C': return rank >= 2 && rank <= 4;
    case 'D': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

RootSystem build_root_system(char type, int rank) {
  if (!lie_data_supported(type, rank))
    throw UnsupportedType("no Lie algebra support for " + std::string(1, type) + std::to_string(rank));
  return root_system(type, rank);
}

int coxeter_number(const RootSystem& rs) { return 1 + rs.height(rs.num_positive() - 1); }

int dual_coxeter_number(const RootSystem& rs) {
  const RootCoords& theta = rs.highest_root();
  Rational theta_sq = rs.inner(theta, theta);
  Rational h = 1;
  for (int i = 0; i < rs.rank; ++i) h += theta[i] * rs.gram[i][i] / theta_sq;
  if (h.get_den() != 1) throw std::logic_error("dual Coxeter number is not an integer");
  return static_cast<int>(h.get_num().get_si());
}

std::vector<int> invariant_degrees(const RootSystem& rs) {
  // n_k = number of positive roots of height k; exponent m occurs n_m - n_{m+1} times.
  std::map<int, int> by_height;
  for (int i = 0; i < rs.num_positive(); ++i) ++by_height[rs.height(i)];
  const int top = by_height.rbegin()->first;
  std::vector<int> degrees;
  for (int m = 1; m <= top; ++m) {
    int here = by_height.count(m) ? by_height[m] : 0;
    int above = by_height.count(m + 1) ? by_height[m + 1] : 0;
    for (int k = 0; k < here - above; ++k) degrees.push_back(m + 1);
  }
  return degrees;
}

}  // namespace cdsw
