#pragma once

#include <stdexcept>
#include <vector>

#include "cdsw/exterior.hpp"
#include "cdsw/lie_algebra.hpp"
#include "cdsw/rootsystem.hpp"

namespace cdsw {

class EmptyIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Prop. cox failed below t^g; this indicates a bug in the root data.
class MismatchBelowG : public std::runtime_error {
 public:
  MismatchBelowG(int degree, long long expected, long long found);
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// An abelian ideal of the Borel subalgebra, as sorted positive-root indices.
struct AbelianIdeal {
  std::vector<int> roots;
  int dim() const { return static_cast<int>(roots.size()); }
  auto operator<=>(const AbelianIdeal&) const = default;
};

/// Checks both defining conditions directly against the full root list.
bool is_abelian_ideal(const RootSystem& rs, const std::vector<int>& roots);

/// Depth-first enumeration over roots in decreasing height. Sorted output.
std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs);

/// Tests every subset of the positive roots; only for small root systems.
std::vector<AbelianIdeal> enumerate_abelian_ideals_brute_force(const RootSystem& rs);

/// Truncated integer power series c_0 + c_1 t + ...
using PoincareSeries = std::vector<long long>;

/// c_d = number of ideals of dimension d.
PoincareSeries poincare_E(const std::vector<AbelianIdeal>& ideals);

/// prod_i (1 - t^(d_i - 1))^(-1) up to and including t^order.
PoincareSeries degree_product_series(const std::vector<int>& degrees, int order);

struct CoxReport {
  int dual_coxeter = 0;
  std::vector<int> degrees;
  PoincareSeries product;  // through t^g
  PoincareSeries poincare; // padded to t^g
  long long discrepancy = 0;  // coefficient of t^g in product - P_E
  bool pass() const { return discrepancy > 0; }
};

/// Compares P_E with the degree product modulo t^g and reports the t^g
/// discrepancy. Throws MismatchBelowG on disagreement below t^g.
CoxReport check_prop_cox(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals);

/// Wedge of the x-generators of the root vectors e_alpha, alpha in the
/// ideal, in canonical order.
ExtElement highest_weight_vector(const AbelianIdeal& ideal, const LieAlgebraData& lie);

}  // namespace cdsw
