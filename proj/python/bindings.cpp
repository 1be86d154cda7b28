#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wcolab/axioms.hpp"
#include "wcolab/characterization.hpp"
#include "wcolab/errors.hpp"
#include "wcolab/parse.hpp"
#include "wcolab/report_json.hpp"

namespace py = pybind11;
using namespace wcolab;

namespace {

GridConfig make_grid(int n_theta, int n_radial, double r_max) {
  GridConfig cfg = GridConfig{}.with_r_max(r_max);
  cfg.n_theta = n_theta;
  cfg.n_radial = n_radial;
  cfg.validate();
  return cfg;
}

WcoSymbols symbols(const std::string& F, const std::string& phi, const GridConfig& cfg) {
  Expr f = parse_expression(F), p = parse_expression(phi);
  validate_expression(f, cfg);
  validate_expression(p, cfg);
  return make_wco(f, p, cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted composition operators on spaces of analytic functions in the disk";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<GridConfig>(m, "GridConfig")
      .def(py::init(&make_grid), py::arg("n_theta") = 512, py::arg("n_radial") = 64,
           py::arg("r_max") = kDefaultRMax)
      .def_readonly("n_theta", &GridConfig::n_theta)
      .def_readonly("n_radial", &GridConfig::n_radial)
      .def_readonly("r_max", &GridConfig::r_max)
      .def_readonly("sup_radii", &GridConfig::sup_radii);

  py::class_<Expr>(m, "Expr")
      .def(py::init([](const std::string& s) { return parse_expression(s); }), py::arg("text"))
      .def("__call__", &Expr::value, py::arg("z"))
      .def("jet", [](const Expr& e, Complex z) {
        Jet2 j = e.jet(z);
        return py::make_tuple(j.f, j.df, j.d2f);
      })
      .def("__str__", &Expr::to_string)
      .def("__repr__", [](const Expr& e) { return "Expr('" + e.to_string() + "')"; });

  m.def("normalize_space", [](const std::string& s) { return SpaceSpec::parse(s).to_string(); });

  m.def(
      "norm_json",
      [](const std::string& space, const std::string& fn, const GridConfig& cfg) {
        Expr f = parse_expression(fn);
        validate_expression(f, cfg);
        return to_json(norm(SpaceSpec::parse(space), f, cfg)).dump();
      },
      py::arg("space"), py::arg("fn"), py::arg("grid"));

  m.def(
      "seminorm",
      [](const std::string& space, const std::string& fn, const GridConfig& cfg) {
        return seminorm(SpaceSpec::parse(space), parse_expression(fn), cfg);
      },
      py::arg("space"), py::arg("fn"), py::arg("grid"));

  m.def(
      "pointeval_bound", [](const std::string& space, double r) { return pointeval_bound(SpaceSpec::parse(space), r); },
      py::arg("space"), py::arg("r"));

  m.def(
      "count_zeros",
      [](const std::string& fn, double r, const GridConfig& cfg) { return count_zeros(parse_expression(fn), r, cfg); },
      py::arg("fn"), py::arg("r"), py::arg("grid"));

  m.def(
      "check_invertible_json",
      [](const std::string& space, const std::string& F, const std::string& phi, const GridConfig& cfg) {
        py::gil_scoped_release release;
        return to_json(check_invertible(symbols(F, phi, cfg), SpaceSpec::parse(space), cfg)).dump();
      },
      py::arg("space"), py::arg("F"), py::arg("phi"), py::arg("grid"));

  m.def(
      "check_isometry_json",
      [](const std::string& space, const std::string& F, const std::string& phi, const GridConfig& cfg) {
        py::gil_scoped_release release;
        return to_json(check_isometry(symbols(F, phi, cfg), SpaceSpec::parse(space), cfg)).dump();
      },
      py::arg("space"), py::arg("F"), py::arg("phi"), py::arg("grid"));

  m.def(
      "axioms_json",
      [](const std::string& space, const GridConfig& cfg, std::uint64_t seed) {
        py::gil_scoped_release release;
        return to_json(run_all(SpaceSpec::parse(space), cfg, seed)).dump();
      },
      py::arg("space"), py::arg("grid"), py::arg("seed") = kDefaultSeed);
}
