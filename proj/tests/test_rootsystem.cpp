#include <doctest.h>

#include <algorithm>
#include <set>

#include "cdsw/rootsystem.hpp"

using namespace cdsw;

namespace {

// Oracle: positive roots generated from scratch by closing the simple roots
// under simple reflections, using only the Cartan matrix.
std::set<RootCoords> reflection_closure(const RootSystem& rs) {
  std::set<RootCoords> seen;
  std::vector<RootCoords> stack;
  for (int i = 0; i < rs.rank; ++i) {
    RootCoords a(rs.rank, 0);
    a[i] = 1;
    stack.push_back(a);
  }
  while (!stack.empty()) {
    RootCoords b = stack.back();
    stack.pop_back();
    if (!seen.insert(b).second) continue;
    for (int i = 0; i < rs.rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < rs.rank; ++j) pairing += b[j] * rs.cartan[j][i];
      RootCoords c = b;
      c[i] -= pairing;
      if (std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; }) &&
          std::any_of(c.begin(), c.end(), [](int v) { return v > 0; }))
        stack.push_back(c);
    }
  }
  return seen;
}

struct Expected {
  char type;
  int rank;
  int positive;
  int coxeter;
  int dual_coxeter;
  std::vector<int> degrees;
};

const std::vector<Expected> kTable = {
    {'A', 1, 1, 2, 2, {2}},
    {'A', 2, 3, 3, 3, {2, 3}},
    {'A', 3, 6, 4, 4, {2, 3, 4}},
    {'A', 5, 15, 6, 6, {2, 3, 4, 5, 6}},
    {'B', 2, 4, 4, 3, {2, 4}},
    {'B', 3, 9, 6, 5, {2, 4, 6}},
    {'C', 3, 9, 6, 4, {2, 4, 6}},
    {'D', 4, 12, 6, 6, {2, 4, 4, 6}},
    {'D', 5, 20, 8, 8, {2, 4, 5, 6, 8}},
    {'E', 6, 36, 12, 12, {2, 5, 6, 8, 9, 12}},
    {'F', 4, 24, 12, 9, {2, 6, 8, 12}},
    {'G', 2, 6, 6, 4, {2, 6}},
};

}  // namespace

TEST_CASE("root counts, Coxeter numbers and degrees") {
  for (const auto& e : kTable) {
    CAPTURE(e.type);
    CAPTURE(e.rank);
    const RootSystem rs = root_system(e.type, e.rank);
    CHECK(rs.num_positive() == e.positive);
    CHECK(coxeter_number(rs) == e.coxeter);
    CHECK(dual_coxeter_number(rs) == e.dual_coxeter);
    CHECK(invariant_degrees(rs) == e.degrees);
  }
}

TEST_CASE("positive roots agree with the reflection-closure oracle") {
  for (const auto& e : kTable) {
    CAPTURE(e.type);
    const RootSystem rs = root_system(e.type, e.rank);
    const std::set<RootCoords> listed(rs.positive_roots.begin(), rs.positive_roots.end());
    CHECK(listed == reflection_closure(rs));
  }
}

TEST_CASE("root ordering and lookups") {
  const RootSystem rs = root_system('B', 3);
  for (int i = 0; i < rs.rank; ++i) CHECK(rs.height(i) == 1);
  for (int i = 1; i < rs.num_positive(); ++i) CHECK(rs.height(i - 1) <= rs.height(i));
  CHECK(rs.find_positive(rs.highest_root()) == rs.num_positive() - 1);
  RootCoords neg = rs.highest_root();
  for (int& v : neg) v = -v;
  CHECK(rs.is_root(neg));
  CHECK_FALSE(rs.find_positive(neg).has_value());
  CHECK_FALSE(rs.is_root(RootCoords(3, 0)));
}

TEST_CASE("Cartan matrix is consistent with the Gram matrix") {
  for (const auto& e : kTable) {
    const RootSystem rs = root_system(e.type, e.rank);
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (int j = 0; j < rs.rank; ++j) {
        const Rational v = 2 * rs.gram[i][j] / rs.gram[j][j];
        CHECK(v == rs.cartan[i][j]);
      }
    }
  }
}

TEST_CASE("unsupported types are rejected") {
  CHECK_THROWS_AS(root_system('Q', 2), UnsupportedType);
  CHECK_THROWS_AS(root_system('D', 3), UnsupportedType);
  CHECK_THROWS_AS(root_system('G', 3), UnsupportedType);
  CHECK_THROWS_AS(build_root_system('E', 6), UnsupportedType);
  CHECK(lie_data_supported('G', 2));
  CHECK_FALSE(lie_data_supported('F', 4));
}
