#include <doctest.h>

#include "cdsw/core.hpp"

using namespace cdsw;

TEST_CASE("relations: one per basis element in each family, right bidegrees") {
  const auto lie = lie_algebra('A', 2);
  const RelationSet rels = relations(lie);
  CHECK(rels.xx.size() == 8);
  CHECK(rels.xy.size() == 8);
  CHECK(rels.yy.size() == 8);
  CHECK(*rels.xx[0].bidegree() == Bidegree{2, 0});
  CHECK(*rels.xy[3].bidegree() == Bidegree{1, 1});
  CHECK(RelationSet::bidegree(Family::YY) == Bidegree{0, 2});
  for (std::size_t c = 0; c < rels.xx.size(); ++c) CHECK(swap_xy(rels.xx[c]) == rels.yy[c]);
}

TEST_CASE("relations are the entries of {X,X}, {X,Y}, {Y,Y}") {
  const auto lie = lie_algebra('A', 1);
  const auto rep = representation(lie, "adjoint");
  const auto X = odd_matrix_x(lie, rep), Y = odd_matrix_y(lie, rep);
  const auto XY = matmul(X, Y) + matmul(Y, X);
  // {X,Y} = sum_c r_c rho(e_c), so the relation span equals the entry span.
  std::vector<ExtElement> entries;
  for (int i = 0; i < XY.size(); ++i)
    for (int j = 0; j < XY.size(); ++j)
      if (!XY(i, j).is_zero()) entries.push_back(XY(i, j));
  const auto comp = Component::full(lie.dim, {1, 1});
  const auto rel_span = Subspace::span(relations(lie).xy, comp, FieldMode::exact());
  const auto entry_span = Subspace::span(entries, comp, FieldMode::exact());
  CHECK(rel_span.rank() == entry_span.rank());
  for (const auto& e : entries) CHECK(rel_span.contains(e));
}

TEST_CASE("relations span a g-submodule") {
  const auto lie = lie_algebra('B', 2);
  const LieModule mod(lie);
  const auto rels = relations(lie);
  const auto comp = Component::full(lie.dim, {1, 1});
  const auto span = Subspace::span(rels.xy, comp, FieldMode::exact());
  CHECK(span.rank() == static_cast<std::size_t>(lie.dim));
  for (int a = 0; a < lie.dim; ++a)
    for (const auto& r : rels.xy) CHECK(span.contains(mod.act(a, r)));
}

TEST_CASE("trace of XY is proportional to S") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    Engine eng(lie_algebra(t, r));
    CHECK(eng.trace_constant() != 0);
    CHECK(trace(matmul(eng.X(), eng.Y())) == eng.S() * eng.trace_constant());
    CHECK(eng.trace_power(1).is_zero());  // Tr(YX) = -Tr(XY)
  }
}

TEST_CASE("trace degrees") {
  CHECK(trace_degrees(lie_algebra('A', 3)) == std::vector<int>{2, 3, 4});
  CHECK(trace_degrees(lie_algebra('B', 2)) == std::vector<int>{2, 4});
  CHECK(trace_degrees(lie_algebra('G', 2)) == std::vector<int>{2, 6});
  CHECK(traces_generate(lie_algebra('C', 3)));
  CHECK_FALSE(traces_generate(lie_algebra('D', 4)));
}

TEST_CASE("S powers on sl(2): S^2 in I, S not in I") {
  Engine eng(lie_algebra('A', 1));
  CHECK(eng.S_power_in_ideal(2));
  CHECK_FALSE(eng.S_power_in_ideal(1));
  CHECK(check_cdsw_ii(eng).passed());
  CHECK(check_cdsw_iii(eng).passed());
}

TEST_CASE("exact and modular Engine answers agree") {
  Engine ex(lie_algebra('A', 2));
  Engine mo(lie_algebra('A', 2), FieldMode::modular(4, 2));
  for (int d = 0; d <= 3; ++d) {
    CHECK(ex.dim_A_invariants({d, d}) == mo.dim_A_invariants({d, d}));
    CHECK(ex.dim_E(d) == mo.dim_E(d));
    CHECK(ex.dim_L(d) == mo.dim_L(d));
  }
  CHECK(ex.S_power_in_ideal(2) == mo.S_power_in_ideal(2));
  CHECK(ex.S_power_in_ideal(3) == mo.S_power_in_ideal(3));
}

TEST_CASE("hat invariants are invariant, swap-symmetric up to sign, of bidegree (k-1,k-1)") {
  Engine eng(lie_algebra('A', 2));
  for (int k : {2, 3}) {
    const auto& h = eng.hat_trace(k);
    REQUIRE(h.bidegree().has_value());
    CHECK(*h.bidegree() == Bidegree{k - 1, k - 1});
    for (int a = 0; a < eng.n(); ++a) CHECK(eng.module().act(a, h).is_zero());
    const auto s = swap_xy(h);
    CHECK((s == h || s == -h));
  }
  CHECK(eng.hat_trace(2).ratio_to(eng.S()).has_value());
}

TEST_CASE("Prop. hat identities hold modulo J") {
  Engine eng(lie_algebra('A', 1));
  const PropHatResult r = check_prop_hat(eng, 2, 2);
  CHECK(r.pass());
  CHECK(check_prop_hat_all(eng).passed());
}

TEST_CASE("hat monomials") {
  const auto ms = hat_monomials({2, 3}, 2);
  // p1^2 (degree 1 each) and p2 (degree 2).
  CHECK(ms.size() == 2);
  CHECK(hat_monomials({2, 3}, 0).size() == 1);
  CHECK(hat_monomials({2, 3}, 0)[0].label() == "1");
}

TEST_CASE("Engine refuses algebras too large for the bit encoding") {
  CHECK_THROWS_AS(Engine(lie_algebra('B', 4)), ComponentTooLarge);
}

TEST_CASE("caps turn into ComponentTooLarge before work starts") {
  Engine eng(lie_algebra('B', 2), FieldMode::exact(), 100);
  CHECK_THROWS_AS(eng.ideal_I({3, 3}), ComponentTooLarge);
}

TEST_CASE("sl(n) remark for n = 1, 2") {
  CHECK(check_sln_remark(1).passed());
  CHECK(check_sln_remark(2).passed());
}
