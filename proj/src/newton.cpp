#include "cdsw/newton.hpp"

#include <stdexcept>

namespace cdsw {

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

void add_scaled(Polynomial& acc, const Polynomial& p, const Rational& c) {
  for (const auto& [e, v] : p) {
    Rational& slot = acc[e];
    slot += c * v;
    if (slot == 0) acc.erase(e);
  }
}

}  // namespace

NewtonPolynomial newton_f(int n) {
  if (n < 1) throw std::invalid_argument("newton_f: n must be positive");
  auto power_sum = [n](int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return Polynomial{{e, Rational(1)}};
  };
  // k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i
  std::vector<Polynomial> e(n + 1);
  e[0] = Polynomial{{std::vector<int>(n, 0), Rational(1)}};
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= k; ++i)
      add_scaled(e[k], multiply(e[k - i], power_sum(i)), Rational(i % 2 ? 1 : -1) / k);
  }
  // e_{n+1} = 0 in n variables, so p_{n+1} = sum_{i=1}^n (-1)^(i-1) e_i p_{n+1-i}.
  NewtonPolynomial out{n, {}};
  for (int i = 1; i <= n; ++i)
    add_scaled(out.f, multiply(e[i], power_sum(n + 1 - i)), Rational(i % 2 ? 1 : -1));
  return out;
}

Rational NewtonPolynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = f.find(exponents);
  return it == f.end() ? Rational(0) : it->second;
}

Rational NewtonPolynomial::leading_power_coefficient() const {
  std::vector<int> e(n, 0);
  e[0] = n + 1;
  return coefficient(e);
}

Rational NewtonPolynomial::mixed_coefficient() const {
  if (n < 2) return 0;
  std::vector<int> e(n, 0);
  e[0] = n - 1;
  e[1] = 1;
  return coefficient(e);
}

Rational NewtonPolynomial::evaluate(const std::vector<Rational>& y) const {
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("newton_f: wrong number of arguments");
  Rational total = 0;
  for (const auto& [e, c] : f) {
    Rational term = c;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) term *= y[i];
    total += term;
  }
  return total;
}

std::string NewtonPolynomial::to_string() const {
  std::string s;
  for (const auto& [e, c] : f) {
    s += (c > 0 ? (s.empty() ? "" : " +") : (s.empty() ? "-" : " -")) + cdsw::to_string(abs(c));
    for (int i = 0; i < n; ++i)
      if (e[i]) s += " y" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return s.empty() ? "0" : s;
}

}  // namespace cdsw
