#include <doctest.h>

#include "cdsw/lie_algebra.hpp"

using namespace cdsw;

namespace {

const std::vector<std::pair<char, int>> kAlgebras = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                                      {'C', 2}, {'B', 3}, {'C', 3}, {'G', 2}};

}  // namespace

TEST_CASE("dimensions and basis layout") {
  CHECK(lie_algebra('A', 1).dim == 3);
  CHECK(lie_algebra('A', 2).dim == 8);
  CHECK(lie_algebra('B', 2).dim == 10);
  CHECK(lie_algebra('C', 3).dim == 21);
  CHECK(lie_algebra('G', 2).dim == 14);
  const auto lie = lie_algebra('A', 2);
  CHECK(lie.chevalley_generators().size() == 6);
  CHECK(lie.basis_labels.size() == 8);
}

TEST_CASE("bracket axioms hold on every basis pair and triple") {
  for (auto [t, r] : kAlgebras) {
    CAPTURE(t);
    CAPTURE(r);
    const auto lie = lie_algebra(t, r);
    CHECK(antisymmetry_holds(lie));
    CHECK(jacobi_holds(lie));
    CHECK(form_invariance_holds(lie));
    CHECK(adjoint_casimir_is_identity(lie));
  }
}

TEST_CASE("representations are homomorphisms") {
  for (auto [t, r] : kAlgebras) {
    const auto lie = lie_algebra(t, r);
    CHECK(representation_respects_bracket(lie, representation(lie, default_representation_label(lie))));
    CHECK(representation_respects_bracket(lie, representation(lie, "adjoint")));
  }
  const auto g2 = lie_algebra('G', 2);
  CHECK(representation(g2, "fundamental-7").dim_v == 7);
  CHECK_THROWS_AS(representation(g2, "vector"), UnsupportedRepresentation);
}

TEST_CASE("Chevalley normalization: [h_i, e_i] = 2 e_i, [e_i, f_i] = h_i") {
  for (auto [t, r] : kAlgebras) {
    const auto lie = lie_algebra(t, r);
    for (int i = 0; i < lie.rank; ++i) {
      CHECK(lie.structure_constant(lie.h_index(i), lie.e_index(i), lie.e_index(i)) == 2);
      CHECK(lie.structure_constant(lie.e_index(i), lie.f_index(i), lie.h_index(i)) == 1);
    }
  }
}

TEST_CASE("weights of root vectors match the root data") {
  const auto lie = lie_algebra('B', 3);
  for (int a = 0; a < lie.roots.num_positive(); ++a) {
    CHECK(lie.weights[lie.e_index(a)] == lie.roots.positive_roots[a]);
    RootCoords neg = lie.roots.positive_roots[a];
    for (int& v : neg) v = -v;
    CHECK(lie.weights[lie.f_index(a)] == neg);
  }
}

TEST_CASE("dual Coxeter numbers and degrees are attached") {
  CHECK(lie_algebra('A', 2).dual_coxeter == 3);
  CHECK(lie_algebra('B', 2).dual_coxeter == 3);
  CHECK(lie_algebra('C', 3).dual_coxeter == 4);
  CHECK(lie_algebra('G', 2).dual_coxeter == 4);
  CHECK(lie_algebra('G', 2).degrees == std::vector<int>{2, 6});
}

TEST_CASE("decompose inverts the representation map") {
  const auto lie = lie_algebra('A', 2);
  const auto rep = representation(lie, "vector");
  for (int a = 0; a < lie.dim; ++a) {
    const auto c = decompose(rep, rep.matrices[a]);
    for (int b = 0; b < lie.dim; ++b) CHECK(c[b] == (a == b ? 1 : 0));
  }
  CHECK_THROWS_AS(decompose(rep, QMatrix::identity(3)), std::domain_error);
}

TEST_CASE("JSON export writes rationals as strings") {
  const auto lie = lie_algebra('B', 2);
  const auto doc = export_json(lie, {representation(lie, "vector")});
  CHECK(doc["basis_labels"].size() == 10);
  CHECK(doc["form"][0][0].is_string());
  CHECK(doc["structure_constants"][0][3].is_string());
  CHECK(doc["representations"][0]["matrices"].size() == 10);
}
