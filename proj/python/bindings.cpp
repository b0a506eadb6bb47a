#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdsw/abideals.hpp"
#include "cdsw/core.hpp"
#include "cdsw/newton.hpp"
#include "cdsw/runner.hpp"

namespace py = pybind11;
using namespace cdsw;

namespace {

FieldMode make_mode(const std::string& mode, std::uint64_t seed) {
  if (mode == "exact") return FieldMode::exact();
  if (mode == "modular") return FieldMode::modular(seed, 2);
  throw ConfigError("mode must be exact or modular");
}

// JSON crosses the boundary as text; the Python side parses it.
std::string run_checks(char type, int rank, const std::string& checks, const std::string& mode, std::uint64_t seed,
                       std::size_t max_monomials, bool heavy) {
  RunConfig cfg;
  cfg.type = type;
  cfg.rank = rank;
  cfg.checks = parse_check_list(checks);
  cfg.mode = make_mode(mode, seed);
  cfg.max_monomials = max_monomials;
  cfg.heavy = heavy;
  RunResult res;
  {
    py::gil_scoped_release release;
    res = run(cfg);
  }
  nlohmann::json out = res.document;
  out["exit_code"] = res.exit_code;
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariant-theory checks for the CDSW superscheme algebra";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<UnsupportedType>(m, "UnsupportedType", PyExc_ValueError);
  py::register_exception<ComponentTooLarge>(m, "ComponentTooLarge", PyExc_RuntimeError);
  py::register_exception<ModularDisagreement>(m, "ModularDisagreement", PyExc_RuntimeError);

  m.def("positive_roots", [](char t, int r) { return root_system(t, r).positive_roots; }, py::arg("type"),
        py::arg("rank"));
  m.def("cartan_matrix", [](char t, int r) { return root_system(t, r).cartan; }, py::arg("type"), py::arg("rank"));
  m.def("dual_coxeter_number", [](char t, int r) { return dual_coxeter_number(root_system(t, r)); }, py::arg("type"),
        py::arg("rank"));
  m.def("invariant_degrees", [](char t, int r) { return invariant_degrees(root_system(t, r)); }, py::arg("type"),
        py::arg("rank"));
  m.def(
      "abelian_ideals",
      [](char t, int r) {
        std::vector<std::vector<int>> out;
        for (const auto& a : enumerate_abelian_ideals(root_system(t, r))) out.push_back(a.roots);
        return out;
      },
      py::arg("type"), py::arg("rank"));
  m.def("_abelian_ideals_json", [](char t, int r) { return abelian_ideals_json(t, r).dump(); });
  m.def("_newton_f", [](int n) {
    std::vector<std::pair<std::vector<int>, std::string>> out;
    for (const auto& [e, c] : newton_f(n).f) out.emplace_back(e, to_string(c));
    return out;
  });
  m.def("_export_json", [](char t, int r) {
    const auto lie = lie_algebra(t, r);
    return export_json(lie, {representation(lie, default_representation_label(lie)), representation(lie, "adjoint")})
        .dump();
  });
  m.def(
      "s_power_in_ideal",
      [](char t, int r, int k, const std::string& mode, std::uint64_t seed) {
        Engine eng(lie_algebra(t, r), make_mode(mode, seed));
        py::gil_scoped_release release;
        return eng.S_power_in_ideal(k);
      },
      py::arg("type"), py::arg("rank"), py::arg("k"), py::arg("mode") = "exact", py::arg("seed") = 1);
  m.def(
      "invariant_dims",
      [](char t, int r, int d, const std::string& mode, std::uint64_t seed) {
        Engine eng(lie_algebra(t, r), make_mode(mode, seed));
        py::gil_scoped_release release;
        return std::map<std::string, std::size_t>{{"A", eng.dim_A_invariants({d, d})},
                                                  {"E", eng.dim_E(d)},
                                                  {"L", eng.dim_L(d)}};
      },
      py::arg("type"), py::arg("rank"), py::arg("d"), py::arg("mode") = "exact", py::arg("seed") = 1,
      "dim A^g, dim E and dim L in bidegree (d, d).");
  m.def("check_names", &known_checks);
  m.def("_run", &run_checks);
}
