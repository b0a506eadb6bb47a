#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cdsw/rational.hpp"

namespace cdsw {

/// Small dense matrix over the rationals. Used for representation matrices,
/// Gram matrices and the basis-decomposition solves of the Chevalley
/// construction; never for the large bigraded components.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  /// Matrix unit E_{ij} (0-based).
  static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Rational>& data() const { return data_; }

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix operator*(const Rational& s) const;
  QMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [a, b] = ab - ba.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// Inverse by Gauss-Jordan; throws std::domain_error if singular.
QMatrix inverse(const QMatrix& m);

/// Rank over Q by Gauss-Jordan elimination.
std::size_t rank(const QMatrix& m);

/// Rank computed by fraction-free (Bareiss) elimination on an integer
/// matrix. Kept separate from the sparse elimination path in exactla so
/// that each can serve as the other's oracle.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> rows);

/// Expresses vectors in the span of a fixed family of vectors. The family is
/// given as rows; coordinates() returns c with sum_i c_i * rows[i] == v, or
/// throws std::domain_error when v lies outside the span.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<std::vector<Rational>>& family);
  std::vector<Rational> coordinates(const std::vector<Rational>& v) const;

 private:
  std::size_t length_ = 0;
  std::vector<std::vector<Rational>> family_;
  std::vector<std::size_t> pivot_cols_;
  QMatrix pivot_inverse_;
};

}  // namespace cdsw
