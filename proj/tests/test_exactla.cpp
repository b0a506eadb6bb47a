#include <doctest.h>

#include <random>

#include "cdsw/dense_matrix.hpp"
#include "cdsw/exactla.hpp"

using namespace cdsw;

namespace {

std::vector<std::vector<Integer>> random_int_matrix(std::mt19937_64& rng, int rows, int cols, int rank_hint) {
  // Product of random rows x cols factors so the rank is at most rank_hint.
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::vector<Integer>> l(rows, std::vector<Integer>(rank_hint)), r(rank_hint, std::vector<Integer>(cols));
  for (auto& row : l)
    for (auto& v : row) v = d(rng);
  for (auto& row : r)
    for (auto& v : row) v = rng() % 3 == 0 ? Integer(d(rng)) : Integer(0);
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      for (int k = 0; k < rank_hint; ++k) m[i][j] += l[i][k] * r[k][j];
  return m;
}

template <class C>
SparseRow<C> sparse(const std::vector<Integer>& row, std::uint64_t p = 0) {
  SparseRow<C> out;
  for (int j = 0; j < static_cast<int>(row.size()); ++j) {
    if (row[j] == 0) continue;
    if constexpr (std::is_same_v<C, Integer>) {
      out.emplace_back(j, row[j]);
    } else {
      const std::uint64_t v = reduce_mod(Rational(row[j]), p);
      if (v) out.emplace_back(j, v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("sparse echelon rank agrees with Bareiss and with two primes") {
  std::mt19937_64 rng(2024);
  const FieldMode mod = FieldMode::modular(17, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 3 + rng() % 12, cols = 3 + rng() % 12, rk = 1 + rng() % 6;
    const auto m = random_int_matrix(rng, rows, cols, rk);
    ExactEchelon ex;
    std::vector<ModEchelon> mods;
    for (auto p : mod.primes) mods.emplace_back(p);
    for (const auto& row : m) {
      ex.insert(sparse<Integer>(row));
      for (auto& e : mods) e.insert(sparse<std::uint64_t>(row, e.prime()));
    }
    const std::size_t oracle = bareiss_rank(m);
    CHECK(ex.rank() == oracle);
    for (auto& e : mods) CHECK(e.rank() == oracle);
    for (const auto& row : m) CHECK(ex.reduces_to_zero(sparse<Integer>(row)));
  }
}

TEST_CASE("dense Gauss-Jordan rank agrees with Bareiss") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_int_matrix(rng, 6, 7, 1 + trial % 5);
    QMatrix q(6, 7);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 7; ++j) q(i, j) = Rational(m[i][j]);
    CHECK(rank(q) == bareiss_rank(m));
  }
}

TEST_CASE("modular primes are distinct, large and seeded") {
  const auto a = FieldMode::modular(3, 3), b = FieldMode::modular(3, 3), c = FieldMode::modular(4, 3);
  CHECK(a.primes == b.primes);
  CHECK(a.primes != c.primes);
  for (auto p : a.primes) {
    CHECK(is_prime_u32(p));
    CHECK(p > (1ULL << 30));
    CHECK(p < (1ULL << 31));
  }
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(reduce_mod(Rational(1, 7), 7), ModularDisagreement);
}

TEST_CASE("subspace membership, exact and modular") {
  const int n = 3;
  const auto comp = Component::full(n, {1, 1});
  CHECK(comp->dim() == 9);
  const auto x = [&](int i) { return ExtElement::x(n, i); };
  const auto y = [&](int i) { return ExtElement::y(n, i); };
  const std::vector<ExtElement> gens = {x(0) * y(0) + x(1) * y(1), x(2) * y(0) * Rational(1, 2)};
  for (const FieldMode& mode : {FieldMode::exact(), FieldMode::modular(1, 2)}) {
    const Subspace s = Subspace::span(gens, comp, mode);
    CHECK(s.rank() == 2);
    CHECK(s.contains(x(0) * y(0) * Rational(3) + x(1) * y(1) * Rational(3) - x(2) * y(0)));
    CHECK_FALSE(s.contains(x(0) * y(0)));
    CHECK(quotient_dim(comp->dim(), s) == 7);
  }
}

TEST_CASE("subspace rejects inputs from other components") {
  const int n = 3;
  Subspace s(Component::full(n, {1, 1}), FieldMode::exact());
  CHECK_THROWS_AS(s.add(ExtElement::x(n, 0)), WrongComponent);
  CHECK_THROWS_AS(s.add(ExtElement::x(n, 0) * ExtElement::y(n, 1) + ExtElement::x(n, 0)), InhomogeneousInput);
}

TEST_CASE("reduced rows are canonical") {
  const int n = 2;
  const auto comp = Component::full(n, {1, 0});
  const auto a = ExtElement::x(n, 0) + ExtElement::x(n, 1), b = ExtElement::x(n, 0) - ExtElement::x(n, 1);
  const auto s1 = Subspace::span({a, b}, comp, FieldMode::exact());
  const auto s2 = Subspace::span({ExtElement::x(n, 1), ExtElement::x(n, 0) * Rational(5)}, comp, FieldMode::exact());
  CHECK(s1.reduced_rows() == s2.reduced_rows());
}

TEST_CASE("kernel of a linear map, exact vs modular") {
  // Map R_(1,0) -> Q^1, x_i -> 1: kernel has dimension n - 1.
  const int n = 4;
  const auto comp = Component::full(n, {1, 0});
  auto image = [](std::size_t) { return SparseRow<Rational>{{0, Rational(1)}}; };
  const Subspace ke = kernel(comp, 1, image, FieldMode::exact());
  const Subspace km = kernel(comp, 1, image, FieldMode::modular(2, 2));
  CHECK(ke.rank() == 3);
  CHECK(km.rank() == 3);
  CHECK(ke.contains(ExtElement::x(n, 0) - ExtElement::x(n, 3)));
  CHECK(km.contains(ExtElement::x(n, 0) - ExtElement::x(n, 3)));
}

TEST_CASE("cap enforcement applies to exact mode only") {
  CHECK_THROWS_AS(enforce_cap(100, FieldMode::exact(), 10, "test"), ComponentTooLarge);
  CHECK_NOTHROW(enforce_cap(100, FieldMode::modular(1), 10, "test"));
  CHECK(component_size(8, {3, 3}) == 56 * 56);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("solve_in_span") {
  const int n = 2;
  const auto a = ExtElement::x(n, 0), b = ExtElement::x(n, 1);
  auto c = solve_in_span({a, b}, a * Rational(2) - b);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == -1);
  CHECK_FALSE(solve_in_span({a}, b).has_value());
}
