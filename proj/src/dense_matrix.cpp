#include "cdsw/dense_matrix.hpp"

#include <utility>

namespace cdsw {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational: " + text);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw std::invalid_argument("malformed rational: " + text);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q(body, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("QMatrix: size mismatch in product");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("QMatrix: size mismatch in sum");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const { return *this + other * Rational(-1); }

QMatrix QMatrix::operator*(const Rational& s) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const QMatrix& m) {
  QMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

SpanSolver::SpanSolver(const std::vector<std::vector<Rational>>& family) : family_(family) {
  const std::size_t n = family.size();
  length_ = n == 0 ? 0 : family[0].size();
  // Row-reduce the family to find n coordinates on which it is independent.
  std::vector<std::vector<Rational>> work = family;
  std::vector<bool> used(n, false);
  for (std::size_t col = 0; col < length_ && pivot_cols_.size() < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && work[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    used[piv] = true;
    pivot_cols_.push_back(col);
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || work[i][col] == 0) continue;
      Rational f = work[i][col] / work[piv][col];
      for (std::size_t j = col; j < length_; ++j) work[i][j] -= f * work[piv][j];
    }
  }
  if (pivot_cols_.size() != n) throw std::domain_error("SpanSolver: family is linearly dependent");
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = family[j][pivot_cols_[i]];
  pivot_inverse_ = inverse(a);
}

std::vector<Rational> SpanSolver::coordinates(const std::vector<Rational>& v) const {
  const std::size_t n = family_.size();
  if (v.size() != length_) throw std::invalid_argument("SpanSolver: length mismatch");
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) c[i] += pivot_inverse_(i, k) * v[pivot_cols_[k]];
  for (std::size_t j = 0; j < length_; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += c[i] * family_[i][j];
    if (s != v[j]) throw std::domain_error("SpanSolver: vector outside the span");
  }
  return c;
}

}  // namespace cdsw
