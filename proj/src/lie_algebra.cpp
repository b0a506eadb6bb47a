#include "cdsw/lie_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cdsw {

namespace {

QMatrix E(std::size_t n, std::size_t i, std::size_t j) { return QMatrix::unit(n, i, j); }

/// Raising Chevalley generators E_1..E_r in a faithful matrix representation.
std::vector<QMatrix> raising_generators(char type, int rank) {
  std::vector<QMatrix> gens;
  switch (type) {
    case 'A': {
      const std::size_t n = rank + 1;
      for (int i = 0; i < rank; ++i) gens.push_back(E(n, i, i + 1));
      break;
    }
    case 'B': {
      // so(2r+1) for the antidiagonal symmetric form.
      const std::size_t n = 2 * rank + 1;
      for (int i = 0; i < rank; ++i) gens.push_back(E(n, i, i + 1) - E(n, n - 2 - i, n - 1 - i));
      break;
    }
    case 'C': {
      // sp(2r) for the form [[0, 1], [-1, 0]].
      const std::size_t n = 2 * rank;
      for (int i = 0; i + 1 < rank; ++i)
        gens.push_back(E(n, i, i + 1) - E(n, rank + i + 1, rank + i));
      gens.push_back(E(n, rank - 1, n - 1));
      break;
    }
    case 'D': {
      // so(2r) for the antidiagonal symmetric form.
      const std::size_t n = 2 * rank;
      for (int i = 0; i + 1 < rank; ++i) gens.push_back(E(n, i, i + 1) - E(n, n - 2 - i, n - 1 - i));
      gens.push_back(E(n, rank - 2, rank) - E(n, rank - 1, rank + 1));
      break;
    }
    case 'G': {
      // 7-dimensional module, weights 2a1+a2, a1+a2, a1, 0, -a1, -a1-a2, -2a1-a2.
      const std::size_t n = 7;
      gens.push_back(E(n, 0, 1) + E(n, 2, 3) * Rational(2) + E(n, 3, 4) + E(n, 5, 6));
      gens.push_back(E(n, 1, 2) + E(n, 4, 5));
      break;
    }
    default:
      throw UnsupportedType(std::string("no matrix realization for type ") + type);
  }
  return gens;
}

/// Lowering partners with [[E, F], E] = 2E where the scaled transpose fails.
std::optional<std::vector<QMatrix>> explicit_lowering(char type) {
  if (type != 'G') return std::nullopt;
  const std::size_t n = 7;
  return std::vector<QMatrix>{E(n, 1, 0) + E(n, 3, 2) + E(n, 4, 3) * Rational(2) + E(n, 6, 5),
                              E(n, 2, 1) + E(n, 5, 4)};
}

std::string root_suffix(const RootCoords& c) {
  std::string s = "_";
  for (int x : c) s += std::to_string(x);
  return s;
}

std::vector<Rational> flatten(const QMatrix& m) { return m.data(); }

}  // namespace

std::vector<int> LieAlgebraData::chevalley_generators() const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i) {
    out.push_back(e_index(i));
    out.push_back(f_index(i));
    out.push_back(h_index(i));
  }
  return out;
}

Rational LieAlgebraData::structure_constant(int a, int b, int c) const {
  for (const auto& t : bracket[a][b])
    if (t.index == c) return t.coeff;
  return 0;
}

LieAlgebraData chevalley_data(const RootSystem& rs) {
  if (!lie_data_supported(rs.type, rs.rank))
    throw UnsupportedType("no Lie algebra support for " + rs.label());
  const int r = rs.rank;
  const int npos = rs.num_positive();

  std::vector<QMatrix> e_simple = raising_generators(rs.type, r);
  std::vector<QMatrix> f_simple, h_simple;
  if (auto lowering = explicit_lowering(rs.type)) {
    f_simple = *lowering;
  } else {
    for (const auto& e : e_simple) {
      QMatrix et = e.transpose();
      QMatrix probe = commutator(commutator(e, et), e);
      // probe = lambda * e; choose F = (2 / lambda) E^T so that [[E, F], E] = 2E.
      Rational lambda = 0;
      for (std::size_t k = 0; k < e.data().size(); ++k)
        if (e.data()[k] != 0) {
          lambda = probe.data()[k] / e.data()[k];
          break;
        }
      if (probe != e * lambda) throw std::logic_error("Chevalley generator normalization failed");
      f_simple.push_back(et * (Rational(2) / lambda));
    }
  }
  for (int i = 0; i < r; ++i) {
    h_simple.push_back(commutator(e_simple[i], f_simple[i]));
    if (commutator(h_simple[i], e_simple[i]) != e_simple[i] * Rational(2))
      throw std::logic_error("Chevalley generator normalization failed");
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (commutator(h_simple[i], e_simple[j]) != e_simple[j] * Rational(rs.cartan[j][i]))
        throw std::logic_error("matrix generators do not realize the Cartan matrix of " + rs.label());

  std::vector<QMatrix> e_root(npos), f_root(npos);
  for (int i = 0; i < r; ++i) {
    e_root[i] = e_simple[i];
    f_root[i] = f_simple[i];
  }
  for (int b = r; b < npos; ++b) {
    const RootCoords& beta = rs.positive_roots[b];
    bool done = false;
    for (int i = 0; i < r && !done; ++i) {
      RootCoords alpha = beta;
      --alpha[i];
      auto a_idx = rs.find_positive(alpha);
      if (!a_idx) continue;
      int p = 0;
      RootCoords down = alpha;
      while (true) {
        --down[i];
        if (!rs.find_positive(down)) break;
        ++p;
      }
      Rational scale = make_rational(1, p + 1);
      e_root[b] = commutator(e_simple[i], e_root[*a_idx]) * scale;
      f_root[b] = commutator(f_simple[i], f_root[*a_idx]) * (-scale);
      done = true;
    }
    if (!done) throw std::logic_error("root without a simple predecessor");
  }

  LieAlgebraData lie;
  lie.roots = rs;
  lie.rank = r;
  lie.dim = 2 * npos + r;
  lie.dual_coxeter = dual_coxeter_number(rs);
  lie.degrees = invariant_degrees(rs);

  std::vector<QMatrix>& basis = lie.defining_matrices;
  for (int b = 0; b < npos; ++b) {
    basis.push_back(e_root[b]);
    lie.basis_labels.push_back("e" + root_suffix(rs.positive_roots[b]));
    lie.weights.push_back(rs.positive_roots[b]);
  }
  for (int i = 0; i < r; ++i) {
    basis.push_back(h_simple[i]);
    lie.basis_labels.push_back("h_" + std::to_string(i + 1));
    lie.weights.push_back(RootCoords(r, 0));
  }
  for (int b = 0; b < npos; ++b) {
    basis.push_back(f_root[b]);
    lie.basis_labels.push_back("f" + root_suffix(rs.positive_roots[b]));
    RootCoords neg = rs.positive_roots[b];
    for (auto& x : neg) x = -x;
    lie.weights.push_back(neg);
  }

  const int n = lie.dim;
  std::vector<std::vector<Rational>> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  SpanSolver solver(flat);
  lie.bracket.assign(n, std::vector<std::vector<BasisTerm>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      QMatrix c = commutator(basis[a], basis[b]);
      if (c.is_zero()) continue;
      std::vector<Rational> coords = solver.coordinates(flatten(c));
      for (int k = 0; k < n; ++k)
        if (coords[k] != 0) {
          lie.bracket[a][b].push_back({k, coords[k]});
          lie.bracket[b][a].push_back({k, -coords[k]});
        }
    }

  // Killing form K_ab = tr(ad e_a ad e_b) = sum_{c,d} f_{ad}^c f_{bc}^d.
  lie.form = QMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Rational s = 0;
      for (int d = 0; d < n; ++d)
        for (const auto& t : lie.bracket[a][d]) {
          Rational other = lie.structure_constant(b, t.index, d);
          if (other != 0) s += t.coeff * other;
        }
      lie.form(a, b) = s;
      lie.form(b, a) = s;
    }
  lie.form_inverse = inverse(lie.form);
  return lie;
}

LieAlgebraData lie_algebra(char type, int rank) { return chevalley_data(build_root_system(type, rank)); }

std::string default_representation_label(const LieAlgebraData& lie) {
  return lie.roots.type == 'G' ? "fundamental-7" : "vector";
}

Representation representation(const LieAlgebraData& lie, const std::string& label) {
  Representation rep;
  rep.label = label;
  if (label == "adjoint") {
    rep.dim_v = lie.dim;
    for (int a = 0; a < lie.dim; ++a) {
      QMatrix m(lie.dim, lie.dim);
      for (int b = 0; b < lie.dim; ++b)
        for (const auto& t : lie.bracket[a][b]) m(t.index, b) = t.coeff;
      rep.matrices.push_back(std::move(m));
    }
    return rep;
  }
  const bool is_g2 = lie.roots.type == 'G';
  if ((label == "vector" && !is_g2) || (label == "fundamental-7" && is_g2)) {
    rep.matrices = lie.defining_matrices;
    rep.dim_v = static_cast<int>(rep.matrices.front().rows());
    return rep;
  }
  throw UnsupportedRepresentation("representation '" + label + "' is not available for " + lie.label());
}

std::vector<Rational> decompose(const Representation& rep, const QMatrix& m) {
  std::vector<std::vector<Rational>> flat;
  for (const auto& x : rep.matrices) flat.push_back(flatten(x));
  return SpanSolver(flat).coordinates(flatten(m));
}

std::vector<Rational> bracket(const LieAlgebraData& lie, const std::vector<Rational>& u, const std::vector<Rational>& v) {
  std::vector<Rational> out(lie.dim, 0);
  for (int a = 0; a < lie.dim; ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < lie.dim; ++b) {
      if (v[b] == 0) continue;
      for (const auto& t : lie.bracket[a][b]) out[t.index] += u[a] * v[b] * t.coeff;
    }
  }
  return out;
}

namespace {

std::vector<Rational> unit_vector(int n, int a) {
  std::vector<Rational> e(n, 0);
  e[a] = 1;
  return e;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

bool antisymmetry_holds(const LieAlgebraData& lie) {
  for (int a = 0; a < lie.dim; ++a)
    for (int b = 0; b < lie.dim; ++b)
      for (int c = 0; c < lie.dim; ++c)
        if (lie.structure_constant(a, b, c) != -lie.structure_constant(b, a, c)) return false;
  return true;
}

bool jacobi_holds(const LieAlgebraData& lie) {
  const int n = lie.dim;
  std::vector<std::vector<std::vector<Rational>>> br(n, std::vector<std::vector<Rational>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) br[a][b] = bracket(lie, unit_vector(n, a), unit_vector(n, b));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::vector<Rational> s = bracket(lie, unit_vector(n, a), br[b][c]);
        auto t = bracket(lie, unit_vector(n, b), br[c][a]);
        auto u = bracket(lie, unit_vector(n, c), br[a][b]);
        for (int k = 0; k < n; ++k) s[k] += t[k] + u[k];
        if (!all_zero(s)) return false;
      }
  return true;
}

bool form_invariance_holds(const LieAlgebraData& lie) {
  const int n = lie.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Rational s = 0;
        for (const auto& t : lie.bracket[a][b]) s += t.coeff * lie.form(t.index, c);
        for (const auto& t : lie.bracket[a][c]) s += t.coeff * lie.form(b, t.index);
        if (s != 0) return false;
      }
  return true;
}

bool adjoint_casimir_is_identity(const LieAlgebraData& lie) {
  const int n = lie.dim;
  for (int v = 0; v < n; ++v) {
    std::vector<Rational> acc(n, 0);
    for (int b = 0; b < n; ++b) {
      std::vector<Rational> inner = bracket(lie, unit_vector(n, b), unit_vector(n, v));
      if (all_zero(inner)) continue;
      for (int a = 0; a < n; ++a) {
        if (lie.form_inverse(a, b) == 0) continue;
        auto outer = bracket(lie, unit_vector(n, a), inner);
        for (int k = 0; k < n; ++k) acc[k] += lie.form_inverse(a, b) * outer[k];
      }
    }
    if (acc != unit_vector(n, v)) return false;
  }
  return true;
}

bool representation_respects_bracket(const LieAlgebraData& lie, const Representation& rep) {
  for (int a = 0; a < lie.dim; ++a)
    for (int b = a + 1; b < lie.dim; ++b) {
      QMatrix lhs(rep.dim_v, rep.dim_v);
      for (const auto& t : lie.bracket[a][b]) lhs = lhs + rep.matrices[t.index] * t.coeff;
      if (lhs != commutator(rep.matrices[a], rep.matrices[b])) return false;
    }
  return true;
}

nlohmann::json export_json(const LieAlgebraData& lie, const std::vector<Representation>& reps) {
  using nlohmann::json;
  json out;
  out["algebra"] = lie.label();
  out["dim"] = lie.dim;
  out["rank"] = lie.rank;
  out["dual_coxeter"] = lie.dual_coxeter;
  out["degrees"] = lie.degrees;
  out["basis_labels"] = lie.basis_labels;
  out["weights"] = lie.weights;
  json sc = json::array();
  for (int a = 0; a < lie.dim; ++a)
    for (int b = a + 1; b < lie.dim; ++b)
      for (const auto& t : lie.bracket[a][b]) sc.push_back({a, b, t.index, to_string(t.coeff)});
  out["structure_constants"] = sc;
  json form = json::array();
  for (std::size_t i = 0; i < lie.form.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < lie.form.cols(); ++j) row.push_back(to_string(lie.form(i, j)));
    form.push_back(row);
  }
  out["form"] = form;
  json jreps = json::array();
  for (const auto& rep : reps) {
    json jr;
    jr["label"] = rep.label;
    jr["dim"] = rep.dim_v;
    json mats = json::array();
    for (const auto& m : rep.matrices) {
      json jm = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        jm.push_back(row);
      }
      mats.push_back(jm);
    }
    jr["matrices"] = mats;
    jreps.push_back(jr);
  }
  out["representations"] = jreps;
  return out;
}

}  // namespace cdsw
