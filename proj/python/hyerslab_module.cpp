#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyerslab/approximate.hpp"
#include "hyerslab/control.hpp"
#include "hyerslab/direct_method.hpp"
#include "hyerslab/gajda.hpp"
#include "hyerslab/selftest.hpp"
#include "hyerslab/symmetric.hpp"

namespace py = pybind11;
using namespace hyerslab;

namespace {

SymmetricSpec make_spec(int n, int d, SymmetricKind kind) {
  SymmetricSpec spec{n, d, std::move(kind)};
  validate(spec);
  return spec;
}

}  // namespace

PYBIND11_MODULE(_hyerslab, m) {
  m.doc() = "Stability experiments for symmetric multi-additive maps";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception<DivergentControl>(m, "DivergentControl", PyExc_ValueError);
  py::register_exception<ThresholdError>(m, "ThresholdError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_OverflowError);

  py::enum_<Mode>(m, "Mode").value("Plus", Mode::Plus).value("Minus", Mode::Minus);

  py::class_<SymmetricSpec>(m, "Symmetric")
      .def_readonly("n", &SymmetricSpec::n)
      .def_readonly("d", &SymmetricSpec::d)
      .def_static("exact", [](int n, int d, double c) { return make_spec(n, d, ExactMultiadditive{c}); },
                  py::arg("n"), py::arg("d") = 1, py::arg("c") = 1.0)
      .def_static(
          "power_perturbed",
          [](int n, int d, double c, double beta, double r) {
            return make_spec(n, d, PowerPerturbed{c, beta, r});
          },
          py::arg("n"), py::arg("d") = 1, py::arg("c") = 1.0, py::arg("beta") = 0.1,
          py::arg("r") = 0.5)
      .def_static("abs_product", [](int n, int d, double eps) { return make_spec(n, d, AbsProduct{eps}); },
                  py::arg("n"), py::arg("d") = 1, py::arg("eps") = 1.0)
      .def_static("gajda_multi", [](int n, double eps) { return make_spec(n, 1, GajdaMulti{eps}); },
                  py::arg("n"), py::arg("eps") = 1.0)
      .def("__call__", &evaluate_symmetric)
      .def("defect", &defect)
      .def("__repr__", [](const SymmetricSpec& s) { return "<Symmetric " + describe(s) + ">"; });

  py::class_<PowerControl>(m, "PowerControl")
      .def(py::init([](int n, double eps, double r) { return PowerControl{n, eps, r}; }),
           py::arg("n"), py::arg("eps"), py::arg("r"))
      .def_readonly("n", &PowerControl::n)
      .def_readonly("eps", &PowerControl::eps)
      .def_readonly("r", &PowerControl::r)
      .def("__call__", &evaluate_control)
      .def("fold", &fold_control);

  m.def("kappa", &kappa, py::arg("n"), py::arg("r"));
  m.def("stability_constant", &stability_constant, py::arg("n"), py::arg("r"));
  m.def("printed_stability_constant", &printed_stability_constant, py::arg("n"), py::arg("r"));
  m.def("mode_for", &mode_for, py::arg("r"));

  py::class_<SeriesValue>(m, "SeriesValue")
      .def_readonly("value", &SeriesValue::value)
      .def_readonly("tail_bound", &SeriesValue::tail_bound)
      .def("total", &SeriesValue::total);
  m.def("stabilizer_series", &stabilizer_series, py::arg("phi"), py::arg("y"), py::arg("mode"),
        py::arg("k_terms"));
  m.def("stabilizer_closed_form", &stabilizer_closed_form, py::arg("phi"), py::arg("y"),
        py::arg("mode"));

  py::class_<DirectMethodConfig>(m, "DirectMethodConfig")
      .def(py::init([](int k_max, double tol) { return DirectMethodConfig{k_max, tol}; }),
           py::arg("k_max") = 60, py::arg("tol") = 1e-12)
      .def_readwrite("k_max", &DirectMethodConfig::k_max)
      .def_readwrite("tol", &DirectMethodConfig::tol);

  py::class_<DirectMethodResult>(m, "DirectMethodResult")
      .def_readonly("limit", &DirectMethodResult::limit)
      .def_readonly("beta", &DirectMethodResult::beta)
      .def_readonly("remaining", &DirectMethodResult::remaining)
      .def_readonly("iterations", &DirectMethodResult::iterations)
      .def_readonly("certified", &DirectMethodResult::certified)
      .def_readonly("b0", &DirectMethodResult::b0)
      .def_readonly("trace", &DirectMethodResult::trace);
  m.def("direct_method", &direct_method, py::arg("b"), py::arg("c"), py::arg("alpha"),
        py::arg("tail"), py::arg("config") = DirectMethodConfig{});

  py::class_<ApproximationResult>(m, "ApproximationResult")
      .def_readonly("value", &ApproximationResult::value)
      .def_readonly("g", &ApproximationResult::g)
      .def_readonly("bound", &ApproximationResult::bound)
      .def_readonly("remaining", &ApproximationResult::remaining)
      .def_readonly("iterations", &ApproximationResult::iterations_used)
      .def_readonly("certified", &ApproximationResult::certified)
      .def_readonly("trace", &ApproximationResult::trace);
  m.def(
      "approximate",
      [](const SymmetricSpec& spec, const PowerControl& phi, const Tuple& y,
         std::optional<Mode> mode, const DirectMethodConfig& cfg, bool check_hypothesis) {
        std::optional<HypothesisCheck> sampling;
        if (check_hypothesis) sampling = HypothesisCheck{};
        return approximate(spec, phi, y, mode.value_or(mode_for(phi.r)), cfg, sampling);
      },
      py::arg("g"), py::arg("phi"), py::arg("y"), py::arg("mode") = py::none(),
      py::arg("config") = DirectMethodConfig{}, py::arg("check_hypothesis") = true);

  m.def("zeta", &zeta, py::arg("x"), py::arg("eps"));
  m.def("gajda", &gajda_exact, py::arg("x"), py::arg("eps"));
  m.def(
      "gajda_series",
      [](double x, double eps, int terms) {
        auto s = gajda_series(x, eps, terms);
        return py::make_tuple(s.value, s.tail_bound);
      },
      py::arg("x"), py::arg("eps"), py::arg("terms"));
  m.def("cauchy_defect", &cauchy_defect, py::arg("x"), py::arg("y"), py::arg("eps"));
  m.def("gajda_multi", &gajda_multi, py::arg("x"), py::arg("eps"));

  py::class_<NonuniquenessVerdict>(m, "NonuniquenessVerdict")
      .def_readonly("valid", &NonuniquenessVerdict::valid)
      .def_readonly("positive_orthant", &NonuniquenessVerdict::positive_orthant)
      .def_readonly("sampler_agrees", &NonuniquenessVerdict::sampler_agrees)
      .def_readonly("worst_ratio", &NonuniquenessVerdict::worst_ratio);
  m.def("nonuniqueness_family", &nonuniqueness_family, py::arg("n"), py::arg("eps"),
        py::arg("delta"), py::arg("alpha"), py::arg("samples") = 4096,
        py::arg("seed") = static_cast<unsigned long long>(kDefaultSeed));

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("x_star", &WitnessReport::x_star)
      .def_readonly("lhs", &WitnessReport::lhs)
      .def_readonly("rhs", &WitnessReport::rhs)
      .def_readonly("ratio", &WitnessReport::ratio)
      .def_readonly("depth", &WitnessReport::depth)
      .def_readonly("analytic", &WitnessReport::analytic)
      .def_property_readonly("valid", &WitnessReport::valid);
  m.def(
      "find_witness",
      [](double slope, double eps, double delta) {
        return find_witness(linear_candidate(slope), eps, delta);
      },
      py::arg("slope"), py::arg("eps"), py::arg("delta"),
      "Witness against the additive map x -> slope * x.");

  m.def(
      "selftest",
      [](unsigned long long seed, const std::string& fault) {
        py::list out;
        for (const auto& r : run_selftest({seed, parse_fault(fault)})) {
          out.append(py::make_tuple(r.name, r.pass, r.detail));
        }
        return out;
      },
      py::arg("seed") = static_cast<unsigned long long>(kDefaultSeed), py::arg("fault") = "none");
}
