#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsw/rational.hpp"

namespace cdsw {

class UnsupportedType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root in simple-root coordinates.
using RootCoords = std::vector<int>;

struct RootSystem {
  char type = 'A';
  int rank = 0;
  /// Simple roots as vectors in an ambient Euclidean space (Bourbaki realization).
  std::vector<std::vector<Rational>> simple_roots;
  /// Gram matrix (alpha_i, alpha_j) of the simple roots.
  std::vector<std::vector<Rational>> gram;
  /// a_ij = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  std::vector<std::vector<int>> cartan;
  /// Ordered by height, then descending lexicographic in simple-root coordinates,
  /// so that the simple roots come first as alpha_1, ..., alpha_r.
  std::vector<RootCoords> positive_roots;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  /// Index of a positive root, or nullopt if coords is not a positive root.
  std::optional<int> find_positive(const RootCoords& coords) const;
  /// True for positive and negative roots (zero is not a root).
  bool is_root(const RootCoords& coords) const;

  int height(int root_index) const;
  const RootCoords& highest_root() const { return positive_roots.back(); }

  /// (beta, gamma) for roots given in simple-root coordinates.
  Rational inner(const RootCoords& beta, const RootCoords& gamma) const;
  /// <beta, alpha_i^vee>.
  int pairing_with_coroot(const RootCoords& beta, int i) const;
};

/// Every type this engine can describe combinatorially: A1-A8, B2-B8,
/// C2-C8, D4-D8, E6-E8, F4, G2.
RootSystem root_system(char type, int rank);

/// Types with full Lie algebra support: A1-A4, B2-B4, C2-C4, D4, G2.
/// Throws UnsupportedType otherwise.
RootSystem build_root_system(char type, int rank);

bool lie_data_supported(char type, int rank);

/// Coxeter number h = 1 + height of the highest root.
int coxeter_number(const RootSystem& rs);

/// Dual Coxeter number: 1 + height of the highest coroot in the coroot basis.
int dual_coxeter_number(const RootSystem& rs);

/// Degrees of the fundamental invariants, ascending (d_1 = 2), obtained from
/// the exponents as the partition dual to the root-height distribution.
std::vector<int> invariant_degrees(const RootSystem& rs);

}  // namespace cdsw
