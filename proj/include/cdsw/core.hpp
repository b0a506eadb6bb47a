#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cdsw/exactla.hpp"
#include "cdsw/exterior.hpp"
#include "cdsw/lie_algebra.hpp"
#include "cdsw/liemodule.hpp"
#include "cdsw/report.hpp"

namespace cdsw {

enum class Family { XX, XY, YY };

/// The three copies of g spanning the generators of I. Relation c is
/// sum_{a,b} f_{ab}^c u^a v^b in the form-dual generators u^a, v^b, the
/// coefficient of e_c in {X, X}, {X, Y} or {Y, Y}.
struct RelationSet {
  std::vector<ExtElement> xx;
  std::vector<ExtElement> xy;
  std::vector<ExtElement> yy;

  const std::vector<ExtElement>& family(Family f) const;
  static Bidegree bidegree(Family f);
};

RelationSet relations(const LieAlgebraData& lie);

/// x^a = sum_d K^{ad} x_d and y^a likewise.
ExtElement dual_x(const LieAlgebraData& lie, int a);
ExtElement dual_y(const LieAlgebraData& lie, int a);

/// S = sum_a x_a ^ y^a.
ExtElement S_element(const LieAlgebraData& lie);

/// X = sum_a x^a rho(e_a), an odd matrix over R.
OddMatrix odd_matrix_x(const LieAlgebraData& lie, const Representation& rep);
OddMatrix odd_matrix_y(const LieAlgebraData& lie, const Representation& rep);

/// Degrees k for which Tr_V(z^k) is used as a generating invariant. For
/// D_n the Pfaffian is not a trace power and is left out.
std::vector<int> trace_degrees(const LieAlgebraData& lie);
/// Whether the trace powers generate all invariant polynomials.
bool traces_generate(const LieAlgebraData& lie);

/// Computation context for one algebra: caches weight-zero slices of
/// invariants and ideal components, powers of z = XY + YX and hats.
/// Not thread-safe.
class Engine {
 public:
  explicit Engine(LieAlgebraData lie, FieldMode mode = FieldMode::exact(), std::size_t cap = kDefaultMonomialCap,
                  std::string rep_label = {});

  const LieAlgebraData& lie() const { return lie_; }
  const LieModule& module() const { return *module_; }
  const Representation& rep() const { return rep_; }
  const RelationSet& rels() const { return rels_; }
  const FieldMode& mode() const { return mode_; }
  std::size_t cap() const { return cap_; }
  int n() const { return lie_.dim; }

  /// Span of r ^ m over the selected families, m running over all monomials
  /// of complementary bidegree, in the full component.
  Subspace ideal_component(const std::vector<Family>& which, Bidegree d) const;
  /// Same, restricted to the weight-w slice.
  Subspace ideal_slice(const std::vector<Family>& which, Bidegree d, const RootCoords& w) const;

  /// Weight-zero slices, cached.
  const Subspace& invariants(Bidegree d);
  /// I = (XX, XY, YY).
  const Subspace& ideal_I(Bidegree d);
  /// J = (XX, YY), the defining ideal of B (x) B.
  const Subspace& ideal_J(Bidegree d);

  /// dim Inv_d - dim(Inv_d cap ideal).
  std::size_t invariant_quotient_dim(Bidegree d, const Subspace& ideal);
  /// dim (A^g)_d.
  std::size_t dim_A_invariants(Bidegree d) { return invariant_quotient_dim(d, ideal_I(d)); }
  /// dim E_(d,d), E = (B (x) B)^g.
  std::size_t dim_E(int d) { return invariant_quotient_dim({d, d}, ideal_J({d, d})); }
  /// dim L_(d,d), L the image of I in E.
  std::size_t dim_L(int d);

  const OddMatrix& X() const { return x_; }
  const OddMatrix& Y() const { return y_; }
  /// z^i with z = XY + YX.
  const OddMatrix& z_power(int i);

  const ExtElement& S() const { return s_; }
  /// c with Tr_V(XY) = c S.
  Rational trace_constant() const { return trace_constant_; }

  /// Tr_V(z^k).
  ExtElement trace_power(int k);
  /// k sum_{i+j=k-2} Tr(z^i X z^j Y), bidegree (k-1, k-1).
  const ExtElement& hat_trace(int k);
  /// sum_{i+j=k-1} Tr(z^i W z^j) with W = X or Y.
  ExtElement d_trace(int k, bool along_x);

  /// S^k in I_(k,k).
  bool S_power_in_ideal(int k);

  /// Exact mode refuses bidegrees whose full component exceeds the cap.
  void guard(Bidegree d, const std::string& what) const;

 private:
  LieAlgebraData lie_;
  FieldMode mode_;
  std::size_t cap_;
  std::unique_ptr<LieModule> module_;
  Representation rep_;
  RelationSet rels_;
  OddMatrix x_, y_;
  ExtElement s_;
  Rational trace_constant_;
  std::vector<OddMatrix> z_powers_;
  std::map<Bidegree, Subspace> inv_cache_, i_cache_, j_cache_;
  std::map<int, ExtElement> hat_cache_;
};

/// Hat monomial: exponent m_i of p-hat_i for each trace degree.
struct HatMonomial {
  std::vector<int> exponents;
  int degree = 0;
  /// e.g. "p1^2*p2^1"; "1" for the empty monomial.
  std::string label() const;
};

/// All hat monomials prod p-hat_i^{m_i} with sum m_i (d_i - 1) = d.
std::vector<HatMonomial> hat_monomials(const std::vector<int>& degrees, int d);
ExtElement evaluate_hat_monomial(Engine& eng, const HatMonomial& m);

struct PropHatResult {
  int k1 = 0, k2 = 0;
  bool f_in_j = false, f_is_zero = false;      // (a) for F = Tr z^{k1}
  bool dfx_in_j = false, dfy_in_j = false;     // (b)
  bool hat_product_in_j = false;               // (c)
  bool hat_product_is_zero = false;
  bool pass() const { return f_in_j && dfx_in_j && dfy_in_j && hat_product_in_j; }
};

/// Prop. hat identities for F = Tr z^{k1}, H = Tr z^{k2}. They hold modulo
/// the (XX, YY) ideal J, where B (x) B lives; membership in J is checked.
PropHatResult check_prop_hat(Engine& eng, int k1, int k2);

CheckReport check_cdsw_ii(Engine& eng);
CheckReport check_cdsw_iii(Engine& eng);
/// dim A^g at (k,k) for k <= up_to_k, plus off-diagonal spot checks.
CheckReport check_part_i(Engine& eng, int up_to_k);
CheckReport check_prop_hat_all(Engine& eng);
CheckReport check_conj_c1(Engine& eng, int up_to_d);
CheckReport check_conj_c2_c3(Engine& eng);
/// Newton-identity relation for sl(n), n in {1, 2, 3}.
CheckReport check_sln_remark(int n, const FieldMode& mode = FieldMode::exact());

}  // namespace cdsw
