#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cdsw/dense_matrix.hpp"
#include "cdsw/rootsystem.hpp"

namespace cdsw {

class UnsupportedRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One nonzero structure constant: [e_a, e_b] contains coeff * e_index.
struct BasisTerm {
  int index;
  Rational coeff;
};

/// Chevalley-basis data of a simple Lie algebra.
///
/// Basis order: e_alpha for the positive roots (root-system order),
/// then h_1..h_r, then f_alpha in the same root order.
struct LieAlgebraData {
  RootSystem roots;
  int dim = 0;
  int rank = 0;
  std::vector<std::string> basis_labels;
  /// Weight of each basis element in simple-root coordinates.
  std::vector<RootCoords> weights;
  /// bracket[a][b] = sparse expansion of [e_a, e_b].
  std::vector<std::vector<std::vector<BasisTerm>>> bracket;
  /// Invariant form, normalized so that the Casimir acts as 1 on g
  /// (this is the Killing form).
  QMatrix form;
  QMatrix form_inverse;
  int dual_coxeter = 0;
  std::vector<int> degrees;
  /// Matrices of the basis in the defining representation (vector for
  /// classical types, the 7-dimensional one for G2).
  std::vector<QMatrix> defining_matrices;

  int e_index(int root) const { return root; }
  int h_index(int i) const { return static_cast<int>(roots.positive_roots.size()) + i; }
  int f_index(int root) const { return static_cast<int>(roots.positive_roots.size()) + rank + root; }
  /// Indices of the Chevalley generators e_i, f_i, h_i of simple root i.
  std::vector<int> chevalley_generators() const;

  /// f_{ab}^c.
  Rational structure_constant(int a, int b, int c) const;

  std::string label() const { return roots.label(); }
};

LieAlgebraData chevalley_data(const RootSystem& rs);

/// Convenience: chevalley_data(build_root_system(type, rank)).
LieAlgebraData lie_algebra(char type, int rank);

struct Representation {
  std::string label;
  int dim_v = 0;
  std::vector<QMatrix> matrices;
};

/// label: "vector" (classical types), "fundamental-7" (G2), "adjoint" (all).
Representation representation(const LieAlgebraData& lie, const std::string& label);

/// The natural representation used for trace invariants: vector for
/// classical types, fundamental-7 for G2.
std::string default_representation_label(const LieAlgebraData& lie);

/// Expands a matrix in the span of the representation matrices; throws
/// std::domain_error if it is not in the image.
std::vector<Rational> decompose(const Representation& rep, const QMatrix& m);

/// [u, v] for coefficient vectors in the Chevalley basis.
std::vector<Rational> bracket(const LieAlgebraData& lie, const std::vector<Rational>& u, const std::vector<Rational>& v);

/// Structural self-checks, each over all basis pairs or triples.
bool antisymmetry_holds(const LieAlgebraData& lie);
bool jacobi_holds(const LieAlgebraData& lie);
/// <[a,b],c> + <b,[a,c]> = 0.
bool form_invariance_holds(const LieAlgebraData& lie);
/// sum_{a,b} K^{ab} ad(e_a) ad(e_b) is the identity on g.
bool adjoint_casimir_is_identity(const LieAlgebraData& lie);
/// rho([e_a, e_b]) = [rho(e_a), rho(e_b)].
bool representation_respects_bracket(const LieAlgebraData& lie, const Representation& rep);

/// JSON export: labels, weights, nonzero structure constants, form and
/// representation matrices, with rationals as "p/q" strings.
nlohmann::json export_json(const LieAlgebraData& lie, const std::vector<Representation>& reps);

}  // namespace cdsw
