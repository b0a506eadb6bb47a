#include "cdsw/exterior.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace cdsw {

namespace {

Monomial above(int j) { return j >= 63 ? 0 : ~((Monomial{2} << j) - 1); }

std::vector<int> generator_sequence(Monomial m) {
  std::vector<int> seq;
  while (m) {
    seq.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return seq;
}

void check_same_algebra(const ExtElement& a, const ExtElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ExtElement: operands over different generator sets");
}

ExtElement combine(const ExtElement& a, const ExtElement& b, bool subtract) {
  check_same_algebra(a, b);
  std::vector<ExtElement::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      out.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
      ++ib;
    } else {
      Rational c = subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return ExtElement::from_terms(a.n(), std::move(out));
}

}  // namespace

Bidegree GeneratorLayout::bidegree(Monomial m) const {
  Bidegree d;
  d.p = std::popcount(m & x_mask()) + ((m & eta()) ? 1 : 0);
  d.q = std::popcount(m & y_mask()) + ((m & xi()) ? 1 : 0);
  return d;
}

std::string GeneratorLayout::name(Monomial m) const {
  std::string s;
  for (int bit : generator_sequence(m)) {
    if (!s.empty()) s += '^';
    if (bit < n)
      s += "x" + std::to_string(bit + 1);
    else if (bit < 2 * n)
      s += "y" + std::to_string(bit - n + 1);
    else if (bit == 2 * n)
      s += "xi";
    else
      s += "eta";
  }
  return s;
}

int wedge_sign(Monomial m1, Monomial m2) {
  if (m1 & m2) return 0;
  int inversions = 0;
  for (Monomial b = m2; b; b &= b - 1) inversions += std::popcount(m1 & above(std::countr_zero(b)));
  return (inversions & 1) ? -1 : 1;
}

ExtElement ExtElement::scalar(int n, const Rational& c) { return monomial(n, 0, c); }

ExtElement ExtElement::monomial(int n, Monomial m, const Rational& c) {
  if (n > kMaxLieDim) throw std::invalid_argument("ExtElement: Lie algebra dimension exceeds generator capacity");
  ExtElement e(n);
  if (c != 0) {
    e.terms_.emplace_back(m, c);
    e.terms_.back().second.canonicalize();
  }
  return e;
}

ExtElement ExtElement::from_terms(int n, std::vector<Term> terms) {
  ExtElement e(n);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    t.second.canonicalize();
    if (!e.terms_.empty() && e.terms_.back().first == t.first) {
      e.terms_.back().second += t.second;
      if (e.terms_.back().second == 0) e.terms_.pop_back();
    } else if (t.second != 0) {
      e.terms_.push_back(std::move(t));
    }
  }
  return e;
}

std::optional<Bidegree> ExtElement::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  GeneratorLayout lay = layout();
  Bidegree d = lay.bidegree(terms_.front().first);
  for (const auto& t : terms_)
    if (lay.bidegree(t.first) != d) return std::nullopt;
  return d;
}

std::optional<int> ExtElement::parity() const {
  if (terms_.empty()) return 0;
  int p = std::popcount(terms_.front().first) & 1;
  for (const auto& t : terms_)
    if ((std::popcount(t.first) & 1) != p) return std::nullopt;
  return p;
}

Rational ExtElement::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

ExtElement ExtElement::operator-() const {
  ExtElement e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

ExtElement& ExtElement::operator+=(const ExtElement& other) {
  if (terms_.empty() && n_ != other.n_ && n_ == 0) n_ = other.n_;
  *this = combine(*this, other, false);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& other) {
  *this = combine(*this, other, true);
  return *this;
}

ExtElement& ExtElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

std::optional<Rational> ExtElement::ratio_to(const ExtElement& other) const {
  if (other.is_zero() || other.terms_.size() != terms_.size()) return std::nullopt;
  Rational r = terms_.front().second / other.terms_.front().second;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].first != other.terms_[i].first) return std::nullopt;
    if (terms_[i].second != r * other.terms_[i].second) return std::nullopt;
  }
  return r;
}

ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
ExtElement operator*(ExtElement a, const Rational& c) { return a *= c; }
ExtElement operator*(const Rational& c, ExtElement a) { return a *= c; }

ExtElement wedge(const ExtElement& u, const ExtElement& v) {
  check_same_algebra(u, v);
  if (u.is_zero() || v.is_zero()) return ExtElement(u.n());
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(std::min<std::size_t>(u.size() * v.size(), 1u << 22));
  Rational prod;
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms()) {
      int s = wedge_sign(mu, mv);
      if (s == 0) continue;
      prod = cu * cv;
      if (s < 0) acc[mu | mv] -= prod;
      else acc[mu | mv] += prod;
    }
  std::vector<ExtElement::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  return ExtElement::from_terms(u.n(), std::move(terms));
}

ExtElement power(const ExtElement& u, int k) {
  ExtElement result = ExtElement::scalar(u.n(), 1);
  for (int i = 0; i < k; ++i) result = wedge(result, u);
  return result;
}

ExtElement component(const ExtElement& u, int p, int q) {
  GeneratorLayout lay = u.layout();
  std::vector<ExtElement::Term> terms;
  for (const auto& t : u.terms())
    if (lay.bidegree(t.first) == Bidegree{p, q}) terms.push_back(t);
  return ExtElement::from_terms(u.n(), std::move(terms));
}

ExtElement extract_xi_eta(const ExtElement& u) {
  GeneratorLayout lay = u.layout();
  const Monomial both = lay.xi() | lay.eta();
  std::vector<ExtElement::Term> terms;
  for (const auto& t : u.terms())
    if ((t.first & both) == both) terms.emplace_back(t.first & ~both, t.second);
  return ExtElement::from_terms(u.n(), std::move(terms));
}

ExtElement swap_xy(const ExtElement& u) {
  GeneratorLayout lay = u.layout();
  std::vector<ExtElement::Term> terms;
  for (const auto& [m, c] : u.terms()) {
    Monomial xs = m & lay.x_mask();
    Monomial ys = (m & lay.y_mask()) >> lay.n;
    Monomial rest = m & ~(lay.x_mask() | lay.y_mask());
    // (x-part)(y-part)(rest) -> (y'-part)(x'-part)(rest); reorder to canonical.
    Monomial new_x = ys;
    Monomial new_y = xs << lay.n;
    int s = wedge_sign(new_y, new_x);
    terms.emplace_back(new_x | new_y | rest, s < 0 ? Rational(-c) : c);
  }
  return ExtElement::from_terms(u.n(), std::move(terms));
}

std::string to_text(const ExtElement& u) {
  if (u.is_zero()) return "0";
  std::vector<const ExtElement::Term*> order;
  for (const auto& t : u.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const ExtElement::Term* a, const ExtElement::Term* b) {
    int da = std::popcount(a->first), db = std::popcount(b->first);
    if (da != db) return da < db;
    return generator_sequence(a->first) < generator_sequence(b->first);
  });
  GeneratorLayout lay = u.layout();
  std::string out;
  for (const auto* t : order) {
    if (!out.empty()) out += ' ';
    out += (t->second > 0 ? "+" : "") + to_string(t->second);
    if (t->first != 0) out += " " + lay.name(t->first);
  }
  return out;
}

ExtElement parse_ext(int n, const std::string& text) {
  GeneratorLayout lay{n};
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "0") return ExtElement(n);
  auto parse_generator = [&](const std::string& name) -> Monomial {
    if (name == "xi") return lay.xi();
    if (name == "eta") return lay.eta();
    if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y')) {
      int idx = std::stoi(name.substr(1));
      if (idx < 1 || idx > n) throw std::invalid_argument("generator index out of range: " + name);
      return name[0] == 'x' ? lay.x(idx - 1) : lay.y(idx - 1);
    }
    throw std::invalid_argument("unknown generator: " + name);
  };
  std::vector<ExtElement::Term> terms;
  for (std::size_t i = 0; i < tokens.size();) {
    Rational c = parse_rational(tokens[i++]);
    Monomial m = 0;
    int sign = 1;
    if (i < tokens.size() && std::isalpha(static_cast<unsigned char>(tokens[i][0]))) {
      std::string mono = tokens[i++];
      std::size_t start = 0;
      while (start <= mono.size()) {
        std::size_t end = mono.find('^', start);
        if (end == std::string::npos) end = mono.size();
        Monomial g = parse_generator(mono.substr(start, end - start));
        int s = wedge_sign(m, g);
        if (s == 0) throw std::invalid_argument("repeated generator in " + mono);
        sign *= s;
        m |= g;
        start = end + 1;
      }
    }
    terms.emplace_back(m, sign < 0 ? Rational(-c) : c);
  }
  return ExtElement::from_terms(n, std::move(terms));
}

OddMatrix::OddMatrix(int size, int n) : size_(size), n_(n), entries_(size * size, ExtElement(n)) {}

OddMatrix OddMatrix::identity(int size, int n) {
  OddMatrix m(size, n);
  for (int i = 0; i < size; ++i) m(i, i) = ExtElement::scalar(n, 1);
  return m;
}

OddMatrix& OddMatrix::operator+=(const OddMatrix& other) {
  if (other.size_ != size_) throw SizeMismatch("OddMatrix: size mismatch in sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

OddMatrix OddMatrix::operator+(const OddMatrix& other) const {
  OddMatrix out = *this;
  out += other;
  return out;
}

OddMatrix OddMatrix::operator*(const Rational& c) const {
  OddMatrix out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

OddMatrix OddMatrix::left_multiply(const ExtElement& u) const {
  OddMatrix out(size_, n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = wedge(u, entries_[k]);
  return out;
}

OddMatrix matmul(const OddMatrix& a, const OddMatrix& b) {
  if (a.size() != b.size()) throw SizeMismatch("matmul: size mismatch");
  const int m = a.size();
  OddMatrix out(m, a.n());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ExtElement acc(a.n());
      for (int k = 0; k < m; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += wedge(a(i, k), b(k, j));
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

ExtElement trace(const OddMatrix& a) {
  ExtElement t(a.n());
  for (int i = 0; i < a.size(); ++i) t += a(i, i);
  return t;
}

}  // namespace cdsw
