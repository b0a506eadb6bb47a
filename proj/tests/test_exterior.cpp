#include <doctest.h>

#include <random>

#include "cdsw/exterior.hpp"

using namespace cdsw;

namespace {

ExtElement random_element(int n, std::mt19937_64& rng, int terms = 6) {
  std::vector<ExtElement::Term> t;
  std::uniform_int_distribution<int> coef(-3, 3);
  const Monomial all = (Monomial{1} << (2 * n + 2)) - 1;
  for (int i = 0; i < terms; ++i) {
    Monomial m = rng() & all;
    // Keep degrees small so products stay cheap.
    while (__builtin_popcountll(m) > 3) m &= m - 1;
    t.emplace_back(m, Rational(coef(rng), 1 + (rng() % 3)));
  }
  return ExtElement::from_terms(n, std::move(t));
}

}  // namespace

TEST_CASE("generators anticommute and square to zero") {
  const int n = 3;
  const auto x1 = ExtElement::x(n, 0), x2 = ExtElement::x(n, 1), y1 = ExtElement::y(n, 0);
  CHECK((x1 * x1).is_zero());
  CHECK(x1 * x2 == -(x2 * x1));
  CHECK(x1 * y1 == -(y1 * x1));
  CHECK((ExtElement::xi(n) * ExtElement::xi(n)).is_zero());
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b01, 0b10) == 1);
  CHECK(wedge_sign(0b11, 0b01) == 0);
}

TEST_CASE("wedge is associative and bilinear on random elements") {
  std::mt19937_64 rng(11);
  const int n = 4;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * Rational(2, 3)) * b == (a * b) * Rational(2, 3));
  }
}

TEST_CASE("graded commutativity") {
  std::mt19937_64 rng(5);
  const int n = 3;
  for (int trial = 0; trial < 30; ++trial) {
    const Monomial m1 = rng() & 0xff, m2 = rng() & 0xff;
    const auto a = ExtElement::monomial(n, m1), b = ExtElement::monomial(n, m2);
    const int sign = (__builtin_popcountll(m1) * __builtin_popcountll(m2)) % 2 ? -1 : 1;
    CHECK(a * b == b * a * Rational(sign));
  }
}

TEST_CASE("bidegree grading puts xi in (0,1) and eta in (1,0)") {
  const int n = 2;
  const GeneratorLayout L{n};
  CHECK(L.bidegree(L.x(0)) == Bidegree{1, 0});
  CHECK(L.bidegree(L.y(1)) == Bidegree{0, 1});
  CHECK(L.bidegree(L.xi()) == Bidegree{0, 1});
  CHECK(L.bidegree(L.eta()) == Bidegree{1, 0});
  const auto u = ExtElement::x(n, 0) * ExtElement::y(n, 1) + ExtElement::xi(n) * ExtElement::x(n, 1);
  REQUIRE(u.bidegree().has_value());
  CHECK(*u.bidegree() == Bidegree{1, 1});
  CHECK_FALSE((ExtElement::x(n, 0) + ExtElement::y(n, 0) * ExtElement::y(n, 1)).bidegree().has_value());
}

TEST_CASE("text format round-trips and is pinned") {
  const int n = 3;
  const auto u = ExtElement::x(n, 0) * ExtElement::y(n, 2) * Rational(-2) + ExtElement::x(n, 1) * Rational(1, 2);
  CHECK(to_text(u) == "+1/2 x2 -2 x1^y3");
  CHECK(to_text(ExtElement(n)) == "0");
  CHECK(parse_ext(n, to_text(u)) == u);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto r = random_element(n, rng);
    CHECK(parse_ext(n, to_text(r)) == r);
  }
  CHECK(to_text(ExtElement::xi(n) * ExtElement::eta(n)) == "+1 xi^eta");
}

TEST_CASE("swap_xy is an involutive algebra automorphism") {
  std::mt19937_64 rng(9);
  const int n = 3;
  for (int i = 0; i < 20; ++i) {
    const auto a = random_element(n, rng), b = random_element(n, rng);
    CHECK(swap_xy(swap_xy(a)) == a);
    CHECK(swap_xy(a * b) == swap_xy(a) * swap_xy(b));
  }
}

TEST_CASE("xi eta extraction and components") {
  const int n = 2;
  const auto x = ExtElement::x(n, 0), y = ExtElement::y(n, 1);
  const auto u = ExtElement::xi(n) * ExtElement::eta(n) * x * y * Rational(3) + x;
  CHECK(extract_xi_eta(u) == x * y * Rational(3));
  CHECK(component(u, 1, 0) == x);
  CHECK(component(u, 2, 2).size() == 1);
}

TEST_CASE("odd matrices: trace is cyclic up to sign for odd entries") {
  const int n = 4;
  OddMatrix a(2, n), b(2, n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = ExtElement::x(n, (i + 2 * j) % n) * Rational(i + 1);
      b(i, j) = ExtElement::y(n, (3 * i + j) % n) * Rational(j + 2);
    }
  CHECK(trace(matmul(a, b)) == -trace(matmul(b, a)));
  CHECK(trace(OddMatrix::identity(3, n)) == ExtElement::scalar(n, 3));
  CHECK_THROWS_AS(matmul(OddMatrix(2, n), OddMatrix(3, n)), SizeMismatch);
}
