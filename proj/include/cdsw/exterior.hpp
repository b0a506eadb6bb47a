#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdsw/rational.hpp"

namespace cdsw {

/// A Grassmann monomial over x_1..x_n, y_1..y_n, xi, eta, stored as a bit
/// set: x_i is bit i-1, y_i is bit n+i-1, xi is bit 2n, eta is bit 2n+1.
/// Increasing bit order is the canonical generator order.
using Monomial = std::uint64_t;

/// 2n + 2 generators must fit in a Monomial.
constexpr int kMaxLieDim = 31;

struct Bidegree {
  int p = 0;
  int q = 0;
  bool operator==(const Bidegree&) const = default;
  auto operator<=>(const Bidegree&) const = default;
};

/// Bit layout helpers for a Lie algebra of dimension n.
struct GeneratorLayout {
  int n = 0;

  Monomial x(int i) const { return Monomial{1} << i; }
  Monomial y(int i) const { return Monomial{1} << (n + i); }
  Monomial xi() const { return Monomial{1} << (2 * n); }
  Monomial eta() const { return Monomial{1} << (2 * n + 1); }
  Monomial x_mask() const { return (Monomial{1} << n) - 1; }
  Monomial y_mask() const { return x_mask() << n; }

  /// xi is graded as a Y-type variable (0,1) and eta as an X-type one
  /// (1,0), so that XY + xi X + eta Y is homogeneous of bidegree (1,1).
  Bidegree bidegree(Monomial m) const;
  /// Generator names in canonical order, e.g. "x1^y3".
  std::string name(Monomial m) const;
};

/// Sign of m1 ^ m2 relative to the canonical monomial m1 | m2; 0 if they
/// share a generator.
int wedge_sign(Monomial m1, Monomial m2);

/// Sparse exact element of the Grassmann algebra. Terms are kept sorted by
/// monomial (bit-set order) with no zero coefficients.
class ExtElement {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit ExtElement(int n = 0) : n_(n) {}

  static ExtElement scalar(int n, const Rational& c);
  static ExtElement monomial(int n, Monomial m, const Rational& c = 1);
  static ExtElement x(int n, int i) { return monomial(n, GeneratorLayout{n}.x(i)); }
  static ExtElement y(int n, int i) { return monomial(n, GeneratorLayout{n}.y(i)); }
  static ExtElement xi(int n) { return monomial(n, GeneratorLayout{n}.xi()); }
  static ExtElement eta(int n) { return monomial(n, GeneratorLayout{n}.eta()); }
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static ExtElement from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  GeneratorLayout layout() const { return GeneratorLayout{n_}; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Bidegree if every term shares one; nullopt for zero or inhomogeneous elements.
  std::optional<Bidegree> bidegree() const;
  /// Parity of the total degree if homogeneous in it.
  std::optional<int> parity() const;
  Rational coefficient(Monomial m) const;

  ExtElement operator-() const;
  ExtElement& operator+=(const ExtElement& other);
  ExtElement& operator-=(const ExtElement& other);
  ExtElement& operator*=(const Rational& c);
  bool operator==(const ExtElement& other) const { return n_ == other.n_ && terms_ == other.terms_; }

  /// Returns r with *this == r * other if such a scalar exists and other != 0.
  std::optional<Rational> ratio_to(const ExtElement& other) const;

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

ExtElement operator+(ExtElement a, const ExtElement& b);
ExtElement operator-(ExtElement a, const ExtElement& b);
ExtElement operator*(ExtElement a, const Rational& c);
ExtElement operator*(const Rational& c, ExtElement a);

/// Product in the Grassmann algebra.
ExtElement wedge(const ExtElement& u, const ExtElement& v);
inline ExtElement operator*(const ExtElement& u, const ExtElement& v) { return wedge(u, v); }
ExtElement power(const ExtElement& u, int k);

/// Terms of bidegree exactly (p, q).
ExtElement component(const ExtElement& u, int p, int q);

/// Coefficient of xi^eta: the part of u containing both xi and eta, with
/// those two generators removed (xi^eta is even, so no sign arises).
ExtElement extract_xi_eta(const ExtElement& u);

/// Algebra involution exchanging x_a and y_a (xi and eta are fixed).
ExtElement swap_xy(const ExtElement& u);

/// Text form: terms in canonical order (degree, then generator sequence),
/// each a signed rational followed by generator names joined by '^',
/// e.g. "-2 x1^y3 +1/2 x2". The zero element is "0".
std::string to_text(const ExtElement& u);
ExtElement parse_ext(int n, const std::string& text);

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square matrix with Grassmann-algebra entries.
class OddMatrix {
 public:
  OddMatrix(int size, int n);

  static OddMatrix identity(int size, int n);

  int size() const { return size_; }
  int n() const { return n_; }
  ExtElement& operator()(int i, int j) { return entries_[i * size_ + j]; }
  const ExtElement& operator()(int i, int j) const { return entries_[i * size_ + j]; }

  OddMatrix& operator+=(const OddMatrix& other);
  OddMatrix operator+(const OddMatrix& other) const;
  OddMatrix operator*(const Rational& c) const;
  /// Every entry multiplied on the left by an element.
  OddMatrix left_multiply(const ExtElement& u) const;

 private:
  int size_;
  int n_;
  std::vector<ExtElement> entries_;
};

OddMatrix matmul(const OddMatrix& a, const OddMatrix& b);
ExtElement trace(const OddMatrix& a);

}  // namespace cdsw
