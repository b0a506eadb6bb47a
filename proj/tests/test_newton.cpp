#include <doctest.h>

#include <random>

#include "cdsw/newton.hpp"

using namespace cdsw;

TEST_CASE("f_n reproduces p_{n+1} from power sums of n random rationals") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 5; ++n) {
    const NewtonPolynomial f = newton_f(n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> t(n);
      for (auto& v : t) {
        v = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4));
        v.canonicalize();
      }
      std::vector<Rational> p(n + 1, 0);
      for (int k = 1; k <= n + 1; ++k) {
        for (const auto& v : t) {
          Rational pw = 1;
          for (int e = 0; e < k; ++e) pw *= v;
          p[k - 1] += pw;
        }
      }
      CHECK(f.evaluate(std::vector<Rational>(p.begin(), p.begin() + n)) == p[n]);
    }
  }
}

TEST_CASE("known small cases") {
  // n = 1: y2 = y1^2.  n = 2: y3 = -y1^3/2 + 3/2 y1 y2.
  CHECK(newton_f(1).leading_power_coefficient() == 1);
  CHECK(newton_f(2).leading_power_coefficient() == Rational(-1, 2));
  CHECK(newton_f(2).mixed_coefficient() == Rational(3, 2));
  CHECK(newton_f(3).leading_power_coefficient() == Rational(1, 6));
  CHECK(newton_f(3).coefficient({1, 0, 1}) == Rational(4, 3));
  CHECK(newton_f(3).coefficient({0, 2, 0}) == Rational(1, 2));
  for (int n = 1; n <= 5; ++n) CHECK(newton_f(n).leading_power_coefficient() != 0);
}

TEST_CASE("f_n is weighted homogeneous of degree n+1") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& [e, c] : newton_f(n).f) {
      int w = 0;
      for (int i = 0; i < n; ++i) w += (i + 1) * e[i];
      CHECK(w == n + 1);
    }
}
