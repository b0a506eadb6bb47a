#include "cdsw/liemodule.hpp"

#include <bit>
#include <unordered_map>

namespace cdsw {

namespace {

constexpr int kLaneBits = 16;

/// Bits strictly between positions i and j.
Monomial between(int i, int j) {
  if (i > j) std::swap(i, j);
  if (j - i <= 1) return 0;
  Monomial upto_j = (Monomial{1} << j) - 1;
  Monomial upto_i = (Monomial{2} << i) - 1;
  return upto_j & ~upto_i;
}

}  // namespace

WeightKey pack_weight(const RootCoords& w) {
  WeightKey key = 0;
  for (std::size_t i = w.size(); i-- > 0;) key = key * (WeightKey{1} << kLaneBits) + w[i];
  return key;
}

RootCoords unpack_weight(WeightKey key, int rank) {
  RootCoords w(rank);
  const WeightKey base = WeightKey{1} << kLaneBits;
  for (int i = 0; i < rank; ++i) {
    WeightKey r = key % base;
    if (r >= base / 2) r -= base;
    if (r < -base / 2) r += base;
    w[i] = static_cast<int>(r);
    key = (key - r) / base;
  }
  return w;
}

LieModule::LieModule(const LieAlgebraData& lie) : lie_(lie) {
  if (lie_.rank > 4) throw std::invalid_argument("LieModule: weight packing supports rank <= 4");
  const int n = lie_.dim;
  generator_weight_.assign(2 * n + 2, 0);
  for (int b = 0; b < n; ++b) {
    generator_weight_[b] = pack_weight(lie_.weights[b]);
    generator_weight_[n + b] = generator_weight_[b];
  }
  casimir_pairs_.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lie_.form_inverse(a, b) != 0) casimir_pairs_[a].emplace_back(b, lie_.form_inverse(a, b));
}

WeightKey LieModule::weight(Monomial m) const {
  WeightKey w = 0;
  for (; m; m &= m - 1) w += generator_weight_[std::countr_zero(m)];
  return w;
}

std::optional<RootCoords> LieModule::weight_of(const ExtElement& u) const {
  if (u.is_zero()) return std::nullopt;
  WeightKey w = weight(u.terms().front().first);
  for (const auto& t : u.terms())
    if (weight(t.first) != w) return std::nullopt;
  return unpack_weight(w, lie_.rank);
}

void LieModule::act_monomial(int a, Monomial m, const Rational& coeff, std::vector<ExtElement::Term>& out) const {
  const int n = lie_.dim;
  for (Monomial rest = m; rest; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    if (bit >= 2 * n) break;  // xi, eta are invariant
    const int block = bit < n ? 0 : n;
    const int b = bit - block;
    for (const auto& t : lie_.bracket[a][b]) {
      const int new_bit = block + t.index;
      Monomial others = m & ~(Monomial{1} << bit);
      if (others & (Monomial{1} << new_bit)) continue;
      int crossings = std::popcount(others & between(bit, new_bit));
      Rational c = coeff * t.coeff;
      if (crossings & 1) c = -c;
      out.emplace_back(others | (Monomial{1} << new_bit), std::move(c));
    }
  }
}

ExtElement LieModule::act(int a, const ExtElement& u) const {
  if (u.n() != n()) throw std::invalid_argument("act: element over a different algebra");
  std::vector<ExtElement::Term> out;
  for (const auto& [m, c] : u.terms()) act_monomial(a, m, c, out);
  return ExtElement::from_terms(u.n(), std::move(out));
}

ExtElement LieModule::casimir(const ExtElement& u) const {
  std::vector<ExtElement::Term> out;
  for (int b = 0; b < n(); ++b) {
    if (casimir_pairs_[b].empty()) continue;
    ExtElement inner = act(b, u);
    if (inner.is_zero()) continue;
    for (const auto& [a, k] : casimir_pairs_[b])
      for (const auto& [m, c] : inner.terms()) act_monomial(a, m, c * k, out);
  }
  return ExtElement::from_terms(u.n(), std::move(out));
}

const std::map<WeightKey, std::vector<Monomial>>& LieModule::subsets_by_weight(int size) const {
  auto it = subset_cache_.find(size);
  if (it != subset_cache_.end()) return it->second;
  std::map<WeightKey, std::vector<Monomial>> groups;
  const int n = lie_.dim;
  if (size == 0) {
    groups[0].push_back(0);
  } else if (size <= n) {
    // Gosper's hack over all size-subsets of the n x-generators.
    Monomial m = (Monomial{1} << size) - 1;
    const Monomial limit = Monomial{1} << n;
    while (m < limit) {
      groups[weight(m)].push_back(m);
      Monomial c = m & (~m + 1);
      Monomial r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return subset_cache_.emplace(size, std::move(groups)).first->second;
}

ComponentPtr LieModule::weight_slice(Bidegree d, const RootCoords& w) const {
  const WeightKey target = pack_weight(w);
  auto key = std::make_pair(d, target);
  auto it = slice_cache_.find(key);
  if (it != slice_cache_.end()) return it->second;
  const int n = lie_.dim;
  std::vector<Monomial> basis;
  const auto& xs = subsets_by_weight(d.p);
  const auto& ys = subsets_by_weight(d.q);
  for (const auto& [wx, xlist] : xs) {
    auto yt = ys.find(target - wx);
    if (yt == ys.end()) continue;
    for (Monomial a : xlist)
      for (Monomial b : yt->second) basis.push_back(a | (b << n));
  }
  std::string tag = "weight";
  for (int c : w) tag += " " + std::to_string(c);
  auto comp = std::make_shared<const Component>(n, d, std::move(basis), tag);
  slice_cache_.emplace(key, comp);
  return comp;
}

Subspace LieModule::invariants(Bidegree d, const FieldMode& mode, std::size_t cap) const {
  enforce_cap(component_size(n(), d), mode, cap, "invariants");
  ComponentPtr slice = zero_weight_slice(d);
  std::vector<std::unordered_map<Monomial, int>> columns_by_gen(lie_.chevalley_generators().size());
  int num_columns = 0;
  std::vector<SparseRow<Rational>> images(slice->dim());
  const std::vector<int> gens = lie_.chevalley_generators();
  std::vector<ExtElement::Term> buf;
  for (std::size_t j = 0; j < slice->dim(); ++j) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      buf.clear();
      act_monomial(gens[g], slice->basis()[j], Rational(1), buf);
      ExtElement img = ExtElement::from_terms(n(), std::move(buf));
      buf = {};
      for (const auto& [m, c] : img.terms()) {
        auto [slot, fresh] = columns_by_gen[g].emplace(m, num_columns);
        if (fresh) ++num_columns;
        images[j].emplace_back(slot->second, c);
      }
    }
  }
  return kernel(slice, static_cast<std::size_t>(num_columns), [&](std::size_t j) { return images[j]; }, mode);
}

}  // namespace cdsw
