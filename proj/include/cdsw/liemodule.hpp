#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "cdsw/exactla.hpp"
#include "cdsw/exterior.hpp"
#include "cdsw/lie_algebra.hpp"

namespace cdsw {

/// Weight packed linearly as sum_i w_i * 2^(16 i), so keys add like weights
/// (rank <= 4, |w_i| < 2^15).
using WeightKey = std::int64_t;

WeightKey pack_weight(const RootCoords& w);
RootCoords unpack_weight(WeightKey key, int rank);

/// The g-module structure on R = /\(g + g): each copy of g carries the
/// adjoint action, e_a . x_b = sum_c f_{ab}^c x_c (same on y), extended to
/// R as derivations; xi and eta are invariant.
///
/// Not thread-safe: weight slices are cached on first use.
class LieModule {
 public:
  explicit LieModule(const LieAlgebraData& lie);

  const LieAlgebraData& lie() const { return lie_; }
  int n() const { return lie_.dim; }

  /// e_a . u.
  ExtElement act(int a, const ExtElement& u) const;
  /// Quadratic Casimir sum_{a,b} K^{ab} e_a e_b; acts as 1 on each generator.
  ExtElement casimir(const ExtElement& u) const;

  WeightKey weight(Monomial m) const;
  /// Weight of u if all its monomials share one; nullopt otherwise (or zero).
  std::optional<RootCoords> weight_of(const ExtElement& u) const;

  /// Monomials of bidegree d and weight w, as a Component. Exact mode
  /// refuses bidegrees whose full component exceeds `cap` monomials.
  ComponentPtr weight_slice(Bidegree d, const RootCoords& w) const;
  ComponentPtr zero_weight_slice(Bidegree d) const { return weight_slice(d, RootCoords(lie_.rank, 0)); }

  /// g-invariants of R_(p,q): the kernel of the Chevalley generators
  /// e_i, f_i, h_i on the weight-zero slice.
  Subspace invariants(Bidegree d, const FieldMode& mode, std::size_t cap = kDefaultMonomialCap) const;

 private:
  /// Appends coeff * (e_a . m) to `out`.
  void act_monomial(int a, Monomial m, const Rational& coeff, std::vector<ExtElement::Term>& out) const;
  const std::map<WeightKey, std::vector<Monomial>>& subsets_by_weight(int size) const;

  LieAlgebraData lie_;
  std::vector<WeightKey> generator_weight_;
  std::vector<std::vector<std::pair<int, Rational>>> casimir_pairs_;  // a -> (b, K^{ab})
  mutable std::map<int, std::map<WeightKey, std::vector<Monomial>>> subset_cache_;
  mutable std::map<std::pair<Bidegree, WeightKey>, ComponentPtr> slice_cache_;
};

}  // namespace cdsw
