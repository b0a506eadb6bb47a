#include "cdsw/exactla.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace cdsw {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

void make_primitive(SparseRow<Integer>& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

SparseRow<Integer> to_integer_row(const SparseRow<Rational>& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow<Integer> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer x = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(x));
  }
  return out;
}

SparseRow<std::uint64_t> to_mod_row(const SparseRow<Rational>& row, std::uint64_t p) {
  SparseRow<std::uint64_t> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    std::uint64_t x = reduce_mod(v, p);
    if (x) out.emplace_back(c, x);
  }
  return out;
}

void sort_row(auto& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2u, 3u, 5u, 7u, 11u, 13u})
    if (n % sp == 0) return n == sp;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 7, 61 are deterministic below 4,759,123,141.
  for (std::uint64_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldMode FieldMode::modular(std::uint64_t seed, int count) {
  if (count < 2) throw std::invalid_argument("modular mode needs at least two primes");
  FieldMode mode;
  mode.kind = Kind::Modular;
  mode.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist((1ull << 30) + 1, (1ull << 31) - 1);
  std::set<std::uint64_t> chosen;
  while (static_cast<int>(chosen.size()) < count) {
    std::uint64_t p = dist(rng) | 1;
    while (!is_prime_u32(p)) p += 2;
    if (p < (1ull << 31)) chosen.insert(p);
  }
  mode.primes.assign(chosen.begin(), chosen.end());
  return mode;
}

void enforce_cap(std::size_t component_monomials, const FieldMode& mode, std::size_t cap, const std::string& what) {
  if (mode.is_exact() && component_monomials > cap)
    throw ComponentTooLarge(what + ": component has " + std::to_string(component_monomials) +
                            " monomials, above the exact-mode cap of " + std::to_string(cap));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("mod_inverse: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  Integer pz(static_cast<unsigned long>(p));
  Integer num = q.get_num() % pz;
  if (num < 0) num += pz;
  Integer den = q.get_den() % pz;
  if (den == 0) throw ModularDisagreement("prime " + std::to_string(p) + " divides a denominator");
  return mul_mod(num.get_ui(), mod_inverse(den.get_ui(), p), p);
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t component_size(int n, Bidegree d) { return binomial(n, d.p) * binomial(n, d.q); }

Component::Component(int n, Bidegree bidegree, std::vector<Monomial> basis, std::string tag)
    : n_(n), bidegree_(bidegree), basis_(std::move(basis)), tag_(std::move(tag)) {
  std::sort(basis_.begin(), basis_.end());
  basis_.erase(std::unique(basis_.begin(), basis_.end()), basis_.end());
}

ComponentPtr Component::full(int n, Bidegree bidegree) {
  GeneratorLayout lay{n};
  std::vector<Monomial> xs, ys, basis;
  for (Monomial m = 0; m < (Monomial{1} << n); ++m) {
    if (std::popcount(m) == bidegree.p) xs.push_back(m);
    if (std::popcount(m) == bidegree.q) ys.push_back(m << n);
  }
  basis.reserve(xs.size() * ys.size());
  for (Monomial a : xs)
    for (Monomial b : ys) basis.push_back(a | b);
  (void)lay;
  return std::make_shared<Component>(n, bidegree, std::move(basis), "full");
}

std::optional<int> Component::index_of(Monomial m) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), m);
  if (it == basis_.end() || *it != m) return std::nullopt;
  return static_cast<int>(it - basis_.begin());
}

// ---------------------------------------------------------------------------
// Exact echelon

SparseRow<Integer> ExactEchelon::reduce(SparseRow<Integer> row) const {
  SparseRow<Integer> next;
  Integer g, fa, fb, v;
  while (!row.empty()) {
    int lead = row.front().first;
    if (lead >= static_cast<int>(pivot_row_of_col_.size()) || pivot_row_of_col_[lead] < 0) break;
    const auto& piv = rows_[pivot_row_of_col_[lead]];
    // row <- (b/g) row - (a/g) piv, which cancels the leading entry.
    mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), piv.front().second.get_mpz_t());
    mpz_divexact(fa.get_mpz_t(), piv.front().second.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(fb.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
    next.clear();
    next.reserve(row.size() + piv.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < piv.size()) {
      if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        next.emplace_back(row[i].first, fa * row[i].second);
        ++i;
      } else if (i >= row.size() || piv[j].first < row[i].first) {
        next.emplace_back(piv[j].first, -fb * piv[j].second);
        ++j;
      } else {
        v = fa * row[i].second;
        mpz_submul(v.get_mpz_t(), fb.get_mpz_t(), piv[j].second.get_mpz_t());
        if (v != 0) next.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    make_primitive(next);
    row.swap(next);
  }
  return row;
}

bool ExactEchelon::insert(SparseRow<Integer> row) {
  sort_row(row);
  row = reduce(std::move(row));
  if (row.empty()) return false;
  make_primitive(row);
  int lead = row.front().first;
  if (lead >= static_cast<int>(pivot_row_of_col_.size())) pivot_row_of_col_.resize(lead + 1, -1);
  pivot_row_of_col_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool ExactEchelon::reduces_to_zero(SparseRow<Integer> row) const {
  sort_row(row);
  return reduce(std::move(row)).empty();
}

// ---------------------------------------------------------------------------
// Modular echelon

SparseRow<std::uint64_t> ModEchelon::reduce(SparseRow<std::uint64_t> row) const {
  if (row.empty()) return row;
  // Scatter into a dense accumulator and visit touched columns in increasing
  // order; pivot rows only reach columns right of their lead.
  std::priority_queue<int, std::vector<int>, std::greater<>> touched;
  auto slot = [&](int c) -> std::uint64_t& {
    if (c >= static_cast<int>(scratch_.size())) scratch_.resize(c + 1, 0);
    return scratch_[c];
  };
  for (const auto& [c, v] : row) {
    slot(c) = v;
    touched.push(c);
  }
  SparseRow<std::uint64_t> out;
  int last = -1;
  while (!touched.empty()) {
    const int c = touched.top();
    touched.pop();
    if (c == last) continue;
    last = c;
    std::uint64_t& a = scratch_[c];
    if (a == 0) continue;
    const bool has_pivot = c < static_cast<int>(pivot_row_of_col_.size()) && pivot_row_of_col_[c] >= 0;
    if (!has_pivot) {
      out.emplace_back(c, a);
      a = 0;
      continue;
    }
    const auto& piv = rows_[pivot_row_of_col_[c]];
    const std::uint64_t f = p_ - a;  // pivot rows are monic
    a = 0;
    for (std::size_t j = 1; j < piv.size(); ++j) {
      std::uint64_t& t = slot(piv[j].first);
      if (t == 0) touched.push(piv[j].first);
      t = (t + f * piv[j].second) % p_;
    }
  }
  return out;
}

bool ModEchelon::insert(SparseRow<std::uint64_t> row) {
  sort_row(row);
  row = reduce(std::move(row));
  if (row.empty()) return false;
  std::uint64_t inv = mod_inverse(row.front().second, p_);
  for (auto& [c, v] : row) v = mul_mod(v, inv, p_);
  int lead = row.front().first;
  if (lead >= static_cast<int>(pivot_row_of_col_.size())) pivot_row_of_col_.resize(lead + 1, -1);
  pivot_row_of_col_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool ModEchelon::reduces_to_zero(SparseRow<std::uint64_t> row) const {
  sort_row(row);
  return reduce(std::move(row)).empty();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(ComponentPtr component, FieldMode mode) : component_(std::move(component)), mode_(std::move(mode)) {
  if (mode_.is_exact()) {
    exact_.emplace();
  } else {
    if (mode_.primes.size() < 2) throw std::invalid_argument("modular mode needs at least two primes");
    for (auto p : mode_.primes) modular_.emplace_back(p);
  }
}

Subspace Subspace::span(const std::vector<ExtElement>& elements, ComponentPtr component, FieldMode mode) {
  Subspace s(std::move(component), std::move(mode));
  for (const auto& e : elements) s.add(e);
  return s;
}

SparseRow<Rational> Subspace::coordinates(const ExtElement& v, bool strict, bool* outside) const {
  SparseRow<Rational> row;
  if (v.is_zero()) return row;
  if (v.n() != component_->n()) throw WrongComponent("element over a different generator set");
  auto d = v.bidegree();
  if (!d) throw InhomogeneousInput("element is not bihomogeneous: " + to_text(v).substr(0, 200));
  if (*d != component_->bidegree())
    throw WrongComponent("element of bidegree (" + std::to_string(d->p) + "," + std::to_string(d->q) +
                         ") tested against component (" + std::to_string(component_->bidegree().p) + "," +
                         std::to_string(component_->bidegree().q) + ")");
  row.reserve(v.size());
  for (const auto& [m, c] : v.terms()) {
    auto idx = component_->index_of(m);
    if (!idx) {
      if (strict) throw WrongComponent("monomial outside the component slice: " + v.layout().name(m));
      if (outside) *outside = true;
      continue;
    }
    row.emplace_back(*idx, c);
  }
  return row;
}

void Subspace::add(const ExtElement& v) {
  SparseRow<Rational> row = coordinates(v, true, nullptr);
  if (row.empty()) return;
  if (exact_) {
    exact_->insert(to_integer_row(row));
  } else {
    for (auto& ech : modular_) ech.insert(to_mod_row(row, ech.prime()));
  }
}

void Subspace::add_subspace(const Subspace& other) {
  if (other.component_ != component_ && other.component_->basis() != component_->basis())
    throw WrongComponent("add_subspace: different components");
  if (exact_ && other.exact_) {
    for (const auto& r : other.exact_->rows()) exact_->insert(r);
  } else if (!exact_ && !other.exact_ && other.modular_.size() == modular_.size()) {
    for (std::size_t k = 0; k < modular_.size(); ++k) {
      if (modular_[k].prime() != other.modular_[k].prime()) throw std::invalid_argument("add_subspace: prime mismatch");
      for (const auto& r : other.modular_[k].rows()) modular_[k].insert(r);
    }
  } else {
    throw std::invalid_argument("add_subspace: field modes differ");
  }
}

std::size_t Subspace::rank() const {
  if (exact_) return exact_->rank();
  std::size_t r = modular_.front().rank();
  for (const auto& ech : modular_)
    if (ech.rank() != r)
      throw ModularDisagreement("rank " + std::to_string(ech.rank()) + " mod " + std::to_string(ech.prime()) +
                                " vs " + std::to_string(r) + " mod " + std::to_string(modular_.front().prime()));
  return r;
}

bool Subspace::contains(const ExtElement& v) const {
  bool outside = false;
  SparseRow<Rational> row = coordinates(v, false, &outside);
  if (outside) return false;
  if (row.empty()) return true;
  if (exact_) return exact_->reduces_to_zero(to_integer_row(row));
  bool first = modular_.front().reduces_to_zero(to_mod_row(row, modular_.front().prime()));
  for (const auto& ech : modular_)
    if (ech.reduces_to_zero(to_mod_row(row, ech.prime())) != first)
      throw ModularDisagreement("membership verdicts differ between primes");
  return first;
}

std::vector<ExtElement> Subspace::basis_elements() const {
  if (!exact_) throw std::logic_error("basis_elements: only available in exact mode");
  std::vector<ExtElement> out;
  for (const auto& row : exact_->rows()) {
    std::vector<ExtElement::Term> terms;
    for (const auto& [c, v] : row) terms.emplace_back(component_->basis()[c], Rational(v));
    out.push_back(ExtElement::from_terms(component_->n(), std::move(terms)));
  }
  return out;
}

std::vector<SparseRow<Rational>> Subspace::reduced_rows() const {
  if (!exact_) throw std::logic_error("reduced_rows: only available in exact mode");
  std::vector<std::map<int, Rational>> rows;
  for (const auto& r : exact_->rows()) {
    std::map<int, Rational> m;
    for (const auto& [c, v] : r) m[c] = Rational(v);
    rows.push_back(std::move(m));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
  for (auto& r : rows) {
    Rational lead = r.begin()->second;
    for (auto& [c, v] : r) v /= lead;
  }
  for (std::size_t i = rows.size(); i-- > 0;) {
    const int col = rows[i].begin()->first;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      auto it = rows[j].find(col);
      if (it == rows[j].end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : rows[i]) {
        Rational& target = rows[j][c];
        target -= f * v;
        if (target == 0) rows[j].erase(c);
      }
    }
  }
  std::vector<SparseRow<Rational>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

Subspace Subspace::wedge_each(const ExtElement& f, ComponentPtr target) const {
  Subspace out(target, mode_);
  if (exact_) {
    for (const auto& b : basis_elements()) out.add(wedge(f, b));
    return out;
  }
  for (std::size_t k = 0; k < modular_.size(); ++k) {
    const std::uint64_t p = modular_[k].prime();
    std::vector<std::pair<Monomial, std::uint64_t>> fmod;
    for (const auto& [m, c] : f.terms()) fmod.emplace_back(m, reduce_mod(c, p));
    for (const auto& row : modular_[k].rows()) {
      std::map<int, std::uint64_t> acc;
      for (const auto& [col, cv] : row) {
        Monomial mb = component_->basis()[col];
        for (const auto& [mf, cf] : fmod) {
          int s = wedge_sign(mf, mb);
          if (s == 0) continue;
          auto idx = target->index_of(mf | mb);
          if (!idx) throw WrongComponent("wedge_each: product leaves the target slice");
          std::uint64_t term = mul_mod(cf, cv, p);
          std::uint64_t& slot = acc[*idx];
          slot = s > 0 ? (slot + term) % p : (slot + p - term) % p;
        }
      }
      SparseRow<std::uint64_t> r;
      for (const auto& [c, v] : acc)
        if (v) r.emplace_back(c, v);
      out.modular_[k].insert(std::move(r));
    }
  }
  return out;
}

Subspace Subspace::from_kernel(ComponentPtr component, FieldMode mode, std::vector<SparseRow<Integer>> exact_rows,
                               std::vector<std::vector<SparseRow<std::uint64_t>>> mod_rows) {
  Subspace s(std::move(component), std::move(mode));
  if (s.exact_) {
    for (auto& r : exact_rows) s.exact_->insert(std::move(r));
  } else {
    for (std::size_t k = 0; k < s.modular_.size() && k < mod_rows.size(); ++k)
      for (auto& r : mod_rows[k]) s.modular_[k].insert(std::move(r));
  }
  return s;
}

std::size_t quotient_dim(std::size_t component_dim, const Subspace& s) { return component_dim - s.rank(); }

Subspace kernel(ComponentPtr source, std::size_t target_dim,
                const std::function<SparseRow<Rational>(std::size_t)>& image, const FieldMode& mode) {
  // Augmented rows [image(e_j) | e_j]; rows whose leading entry falls in the
  // identity block are kernel vectors.
  const int shift = static_cast<int>(target_dim);
  const std::size_t d = source->dim();
  if (mode.is_exact()) {
    ExactEchelon ech;
    for (std::size_t j = 0; j < d; ++j) {
      SparseRow<Rational> img = image(j);
      sort_row(img);
      img.emplace_back(shift + static_cast<int>(j), Rational(1));
      ech.insert(to_integer_row(img));
    }
    std::vector<SparseRow<Integer>> rows;
    for (const auto& r : ech.rows())
      if (r.front().first >= shift) {
        SparseRow<Integer> k;
        for (const auto& [c, v] : r) k.emplace_back(c - shift, v);
        rows.push_back(std::move(k));
      }
    return Subspace::from_kernel(source, mode, std::move(rows), {});
  }
  std::vector<std::vector<SparseRow<std::uint64_t>>> mod_rows;
  std::vector<SparseRow<Rational>> images(d);
  for (std::size_t j = 0; j < d; ++j) {
    images[j] = image(j);
    sort_row(images[j]);
    images[j].emplace_back(shift + static_cast<int>(j), Rational(1));
  }
  for (auto p : mode.primes) {
    ModEchelon ech(p);
    for (std::size_t j = 0; j < d; ++j) ech.insert(to_mod_row(images[j], p));
    std::vector<SparseRow<std::uint64_t>> rows;
    for (const auto& r : ech.rows())
      if (r.front().first >= shift) {
        SparseRow<std::uint64_t> k;
        for (const auto& [c, v] : r) k.emplace_back(c - shift, v);
        rows.push_back(std::move(k));
      }
    mod_rows.push_back(std::move(rows));
  }
  return Subspace::from_kernel(source, mode, {}, std::move(mod_rows));
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<ExtElement>& family, const ExtElement& v) {
  struct Row {
    std::map<Monomial, Rational> vec;
    std::map<std::size_t, Rational> origin;
  };
  std::map<Monomial, Row> pivots;
  auto reduce = [&](Row& r) {
    while (!r.vec.empty()) {
      auto lead = r.vec.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) return;
      Rational f = lead->second;  // pivot rows are monic
      for (const auto& [m, c] : it->second.vec) {
        Rational& slot = r.vec[m];
        slot -= f * c;
        if (slot == 0) r.vec.erase(m);
      }
      for (const auto& [i, c] : it->second.origin) {
        Rational& slot = r.origin[i];
        slot -= f * c;
        if (slot == 0) r.origin.erase(i);
      }
    }
  };
  for (std::size_t i = 0; i < family.size(); ++i) {
    Row r;
    for (const auto& [m, c] : family[i].terms()) r.vec[m] = c;
    r.origin[i] = 1;
    reduce(r);
    if (r.vec.empty()) continue;
    Rational lead = r.vec.begin()->second;
    for (auto& [m, c] : r.vec) c /= lead;
    for (auto& [k, c] : r.origin) c /= lead;
    Monomial key = r.vec.begin()->first;
    pivots.emplace(key, std::move(r));
  }
  Row target;
  for (const auto& [m, c] : v.terms()) target.vec[m] = c;
  reduce(target);
  if (!target.vec.empty()) return std::nullopt;
  // target = v - sum(origin-combination) == 0 with origin holding minus the coefficients.
  std::vector<Rational> coeffs(family.size());
  for (const auto& [i, c] : target.origin) coeffs[i] = -c;
  return coeffs;
}

}  // namespace cdsw
