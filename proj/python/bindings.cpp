#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spolar/bounds.hpp"
#include "spolar/errors.hpp"
#include "spolar/polarization.hpp"

namespace py = pybind11;
using namespace spolar;

namespace {

py::dict report_dict(const BoundReport& rep) {
  py::dict d;
  d["kind"] = to_string(rep.kind);
  d["value"] = rep.value;
  d["N"] = rep.N;
  if (rep.rule) {
    d["nodes"] = rep.rule->nodes;
    d["weights"] = rep.rule->weights;
    std::vector<double> mult;
    for (double w : rep.rule->weights) mult.push_back(rep.N * w);
    d["multiplicities"] = mult;
  }
  if (rep.admissibility) d["admissible"] = rep.admissibility->pass;
  d["consistent"] = rep.consistent;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "universal polarization bounds for spherical codes and designs";

  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<numeric_error>(m, "NumericError", PyExc_RuntimeError);

  py::class_<Potential>(m, "Potential")
      .def_static("riesz", &Potential::riesz, py::arg("m"))
      .def_static("gauss", &Potential::gauss)
      .def_static("log", &Potential::log_potential)
      .def("__call__", [](const Potential& h, double t) { return h(t); })
      .def("derivative", &Potential::derivative, py::arg("order"), py::arg("t"))
      .def_property_readonly("name", &Potential::name)
      .def_property_readonly("continuous_at_one", &Potential::continuous_at_one);
  m.def("parse_potential", &parse_potential, py::arg("spec"));

  py::class_<SphericalCode>(m, "SphericalCode")
      .def(py::init<int, std::vector<Vec>, std::string>(), py::arg("n"), py::arg("points"),
           py::arg("name") = "")
      .def_property_readonly("n", &SphericalCode::n)
      .def("__len__", &SphericalCode::size)
      .def_property_readonly("points", &SphericalCode::points)
      .def_property_readonly("name", &SphericalCode::name);
  m.def("builtin_code", &builtin_code, py::arg("name"));
  m.def("load_code_csv", &load_code_csv, py::arg("path"));

  m.def(
      "moments",
      [](const SphericalCode& code, int maxdeg) {
        const DesignProfile p = moments(code, maxdeg);
        py::dict d;
        d["moments"] = p.moments;
        d["strength"] = p.strength;
        d["index_set"] = p.index_set;
        d["tolerance"] = p.tolerance;
        return d;
      },
      py::arg("code"), py::arg("maxdeg") = 20);
  m.def("dgs_bound", &dgs_bound, py::arg("n"), py::arg("tau"));
  m.def(
      "s_of_code",
      [](const SphericalCode& code, std::uint64_t seed) {
        const CoveringResult r = s_of_code(code, seed);
        return py::make_tuple(r.value, r.witness);
      },
      py::arg("code"), py::arg("seed") = 20240901ull);

  m.def(
      "pulb",
      [](int n, int tau, int N, const Potential& h) { return report_dict(pulb(n, tau, N, h)); },
      py::arg("n"), py::arg("tau"), py::arg("N"), py::arg("h"));
  m.def(
      "pulb_negative",
      [](int n, int tau, int N, const Potential& h) {
        return report_dict(pulb_negative(n, tau, N, h));
      },
      py::arg("n"), py::arg("tau"), py::arg("N"), py::arg("h"));
  m.def(
      "puub",
      [](int n, int tau, int N, double s, const Potential& h) {
        return report_dict(puub(n, tau, N, s, h));
      },
      py::arg("n"), py::arg("tau"), py::arg("N"), py::arg("s"), py::arg("h"));
  m.def("fl_bound", &fl_bound, py::arg("n"), py::arg("tau"));
  m.def("named_s_star", &named_s_star, py::arg("family"));

  m.def(
      "cell600_bound",
      [](const Potential& h) {
        const Cell600Result res = cell600_bound(h);
        py::dict d = report_dict(res.report);
        d["p12_partial_coefficients"] = res.diag.partial_coefficients;
        d["h0_times_n"] = res.diag.h0_times_n;
        d["min_surplus"] = res.diag.min_surplus;
        d["p12_residual"] = res.diag.p12_residual;
        return d;
      },
      py::arg("h"));

  m.def(
      "potential_at",
      [](const Vec& x, const SphericalCode& code, const Potential& h) {
        return potential_at(x, code, h);
      },
      py::arg("x"), py::arg("code"), py::arg("h"));
  const auto extremum_dict = [](const ExtremumResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["witness"] = r.witness;
    d["gradient_norm"] = r.gradient_norm;
    d["starts_used"] = r.starts_used;
    return d;
  };
  m.def(
      "minimize",
      [extremum_dict](const SphericalCode& code, const Potential& h, std::uint64_t seed) {
        return extremum_dict(minimize_potential(code, h, seed));
      },
      py::arg("code"), py::arg("h"), py::arg("seed") = 20240901ull);
  m.def(
      "maximize",
      [extremum_dict](const SphericalCode& code, const Potential& h, std::uint64_t seed) {
        return extremum_dict(maximize_potential(code, h, seed));
      },
      py::arg("code"), py::arg("h"), py::arg("seed") = 20240901ull);
  m.def("one_design_optimum", &one_design_optimum, py::arg("n"), py::arg("N"), py::arg("h"));
}
