#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdsw/exterior.hpp"
#include "cdsw/rational.hpp"

namespace cdsw {

class ComponentTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InhomogeneousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongComponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two primes produced different answers; the computation cannot be trusted.
class ModularDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldMode {
  enum class Kind { Exact, Modular };

  Kind kind = Kind::Exact;
  /// Primes in (2^30, 2^31) in modular mode; results need all of them to agree.
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0;

  static FieldMode exact() { return FieldMode{}; }
  /// Draws `count` (>= 2) distinct random primes above 2^30 from `seed`.
  static FieldMode modular(std::uint64_t seed, int count = 2);

  bool is_exact() const { return kind == Kind::Exact; }
  bool probabilistic() const { return kind == Kind::Modular; }
  std::string name() const { return is_exact() ? "exact" : "modular"; }
};

bool is_prime_u32(std::uint64_t n);

/// Default monomial-count cap for components handled in exact mode.
inline constexpr std::size_t kDefaultMonomialCap = 2'000'000;

/// Throws ComponentTooLarge when an exact-mode computation would touch a
/// component with more than `cap` monomials. Modular mode is exempt.
void enforce_cap(std::size_t component_monomials, const FieldMode& mode, std::size_t cap,
                 const std::string& what);

/// A coordinatized slice of one bigraded component of R: the bidegree and
/// an ordered monomial basis (the whole component, or one weight space).
class Component {
 public:
  Component(int n, Bidegree bidegree, std::vector<Monomial> basis, std::string tag = {});

  /// Every monomial of bidegree (p, q) in the x and y generators.
  static std::shared_ptr<const Component> full(int n, Bidegree bidegree);

  int n() const { return n_; }
  Bidegree bidegree() const { return bidegree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::optional<int> index_of(Monomial m) const;
  const std::string& tag() const { return tag_; }

 private:
  int n_;
  Bidegree bidegree_;
  std::vector<Monomial> basis_;  // sorted ascending
  std::string tag_;
};

using ComponentPtr = std::shared_ptr<const Component>;

std::size_t binomial(int n, int k);
/// C(n, p) * C(n, q): the size of R_(p,q).
std::size_t component_size(int n, Bidegree d);

template <class Coef>
using SparseRow = std::vector<std::pair<int, Coef>>;

/// Sparse fraction-free row echelon over Z: rows are primitive integer
/// vectors with positive leading entry, one per pivot column.
class ExactEchelon {
 public:
  /// Returns true if the row was independent of the existing rows.
  bool insert(SparseRow<Integer> row);
  bool reduces_to_zero(SparseRow<Integer> row) const;
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow<Integer>>& rows() const { return rows_; }

 private:
  /// Eliminates leading entries until the leading column has no pivot.
  SparseRow<Integer> reduce(SparseRow<Integer> row) const;

  std::vector<SparseRow<Integer>> rows_;
  std::vector<int> pivot_row_of_col_;
};

/// Same as ExactEchelon over Z/p, rows monic.
class ModEchelon {
 public:
  explicit ModEchelon(std::uint64_t p) : p_(p) {}
  bool insert(SparseRow<std::uint64_t> row);
  bool reduces_to_zero(SparseRow<std::uint64_t> row) const;
  std::size_t rank() const { return rows_.size(); }
  std::uint64_t prime() const { return p_; }
  const std::vector<SparseRow<std::uint64_t>>& rows() const { return rows_; }

 private:
  SparseRow<std::uint64_t> reduce(SparseRow<std::uint64_t> row) const;

  std::uint64_t p_;
  std::vector<SparseRow<std::uint64_t>> rows_;
  std::vector<int> pivot_row_of_col_;
  mutable std::vector<std::uint64_t> scratch_;  // dense accumulator, all zero between calls
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
/// Reduces a rational modulo p; throws ModularDisagreement if p divides the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

/// Echelonized span inside a Component, in one FieldMode.
class Subspace {
 public:
  Subspace(ComponentPtr component, FieldMode mode);

  static Subspace span(const std::vector<ExtElement>& elements, ComponentPtr component, FieldMode mode);

  /// Adds one element; it must be supported on the component's monomials
  /// (InhomogeneousInput for mixed bidegrees, WrongComponent otherwise).
  void add(const ExtElement& v);
  /// Adds all rows of another subspace of the same component.
  void add_subspace(const Subspace& other);

  std::size_t rank() const;
  bool contains(const ExtElement& v) const;

  const Component& component() const { return *component_; }
  ComponentPtr component_ptr() const { return component_; }
  const FieldMode& mode() const { return mode_; }

  /// Exact mode only: the spanning rows as elements of R.
  std::vector<ExtElement> basis_elements() const;
  /// Exact mode only: the reduced row echelon form over Q (canonical).
  std::vector<SparseRow<Rational>> reduced_rows() const;

  /// Span of { f ^ b : b a row of this subspace } inside `target`.
  Subspace wedge_each(const ExtElement& f, ComponentPtr target) const;

  /// Builds a subspace directly from coordinate rows (per prime in modular mode).
  static Subspace from_kernel(ComponentPtr component, FieldMode mode, std::vector<SparseRow<Integer>> exact_rows,
                              std::vector<std::vector<SparseRow<std::uint64_t>>> mod_rows);

 private:
  SparseRow<Rational> coordinates(const ExtElement& v, bool strict, bool* outside) const;

  ComponentPtr component_;
  FieldMode mode_;
  std::optional<ExactEchelon> exact_;
  std::vector<ModEchelon> modular_;
};

std::size_t quotient_dim(std::size_t component_dim, const Subspace& s);

/// Kernel of a linear map out of `source`. `image(j)` gives the image of the
/// j-th basis monomial as a sparse rational vector over `target_dim`
/// coordinates. Result is a Subspace of `source`.
Subspace kernel(ComponentPtr source, std::size_t target_dim,
                const std::function<SparseRow<Rational>(std::size_t)>& image, const FieldMode& mode);

/// Coefficients c with sum_i c_i family[i] == v, or nullopt if v is not in
/// the span (exact arithmetic; intended for small families).
std::optional<std::vector<Rational>> solve_in_span(const std::vector<ExtElement>& family, const ExtElement& v);

}  // namespace cdsw
