#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdsw/rational.hpp"

namespace cdsw {

/// Polynomial in y_1..y_n keyed by exponent vectors.
using Polynomial = std::map<std::vector<int>, Rational>;

/// f_n with y_{n+1} = f_n(y_1, ..., y_n) when y_i are the power sums of n
/// variables.
struct NewtonPolynomial {
  int n = 0;
  Polynomial f;

  Rational coefficient(const std::vector<int>& exponents) const;
  /// Coefficient of y_1^(n+1).
  Rational leading_power_coefficient() const;
  /// Coefficient of y_1^(n-1) y_2 (zero for n = 1, where that monomial has degree 1).
  Rational mixed_coefficient() const;
  Rational evaluate(const std::vector<Rational>& y) const;
  std::string to_string() const;
};

NewtonPolynomial newton_f(int n);

}  // namespace cdsw
