#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgl/classifier.hpp"
#include "hgl/envelopes.hpp"
#include "hgl/hermite.hpp"
#include "hgl/io.hpp"
#include "hgl/presets.hpp"
#include "hgl/spectral.hpp"

namespace py = pybind11;

namespace {

double log_of(const hgl::LogScalar& v) { return v.log_magnitude(); }

py::dict coefficients_dict(const hgl::HermiteSeries& s) {
  py::dict out;
  for (const auto& [alpha, c] : s.coefficients()) {
    py::tuple key(alpha.dimension());
    for (int i = 0; i < alpha.dimension(); ++i) key[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)];
    out[key] = c;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hermite-spectral numerics: coefficients, harmonic oscillator powers, envelopes, classification";

  py::class_<hgl::HermiteSeries>(m, "HermiteSeries")
      .def(py::init<int, int>(), py::arg("dimension"), py::arg("max_degree"))
      .def_property_readonly("dimension", &hgl::HermiteSeries::dimension)
      .def_property_readonly("max_degree", &hgl::HermiteSeries::max_degree)
      .def("set",
           [](hgl::HermiteSeries& s, std::vector<int> alpha, std::complex<double> v) {
             s.set(hgl::MultiIndex(std::move(alpha)), v);
           })
      .def("get", [](const hgl::HermiteSeries& s, std::vector<int> alpha) { return s.get(hgl::MultiIndex(std::move(alpha))); })
      .def("coefficients", &coefficients_dict)
      .def("parseval_sum", &hgl::HermiteSeries::parseval_sum)
      .def("effective_degree", &hgl::HermiteSeries::effective_degree)
      .def("__len__", &hgl::HermiteSeries::size)
      .def("to_json", [](const hgl::HermiteSeries& s) { return hgl::series_to_json(s).dump(); })
      .def_static("from_json", [](const std::string& text) { return hgl::series_from_json(nlohmann::json::parse(text)); });

  m.def("hermite_eval", &hgl::hermite_eval, py::arg("k"), py::arg("x"));
  m.def(
      "hermite_eval_multi",
      [](std::vector<int> alpha, std::vector<double> x) { return hgl::hermite_eval_multi(hgl::MultiIndex(std::move(alpha)), x); },
      py::arg("alpha"), py::arg("x"));
  m.def(
      "gauss_hermite_rule",
      [](int n) {
        const auto r = hgl::gauss_hermite_rule(n);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("n"));
  m.def(
      "analyze",
      [](const std::function<std::complex<double>(std::vector<double>)>& f, int d, int max_degree,
         std::optional<int> quad_order) {
        return hgl::analyze([&f](std::span<const double> x) { return f(std::vector<double>(x.begin(), x.end())); }, d,
                            max_degree, quad_order);
      },
      py::arg("f"), py::arg("dimension"), py::arg("max_degree"), py::arg("quad_order") = py::none());
  m.def(
      "synthesize", [](const hgl::HermiteSeries& s, std::vector<double> x) { return hgl::synthesize(s, x); },
      py::arg("series"), py::arg("x"));

  m.def("apply_H", &hgl::apply_H, py::arg("series"), py::arg("power"));
  m.def(
      "log_l2_norm", [](const hgl::HermiteSeries& s, int power) { return log_of(hgl::l2_norm_of_power(s, power)); },
      py::arg("series"), py::arg("power") = 0);
  m.def(
      "log_lp_norm", [](const hgl::HermiteSeries& s, double p) { return log_of(hgl::lp_norm(s, p)); }, py::arg("series"),
      py::arg("p"));
  m.def(
      "log_norm_sequence",
      [](const hgl::HermiteSeries& s, int n_max, const std::string& kind, double sigma) {
        const auto seq = hgl::norm_sequence(s, n_max, hgl::NormKind::parse(kind), sigma);
        std::vector<std::pair<int, double>> out;
        for (const auto& [n, v] : seq.values) out.emplace_back(n, log_of(v));
        return out;
      },
      py::arg("series"), py::arg("n_max"), py::arg("norm") = "l2", py::arg("sigma") = 1.0);

  m.def(
      "log_envelope_E", [](int n, double sigma, double r) { return log_of(hgl::envelope_E(n, sigma, r)); }, py::arg("n"),
      py::arg("sigma"), py::arg("r"));
  m.def(
      "log_envelope_coeff_flat",
      [](std::vector<int> alpha, double sigma, double r) {
        return log_of(hgl::envelope_coeff_flat(hgl::MultiIndex(std::move(alpha)), sigma, r));
      },
      py::arg("alpha"), py::arg("sigma"), py::arg("r"));
  m.def(
      "log_envelope_coeff_s",
      [](std::vector<int> alpha, double s, double r) {
        return log_of(hgl::envelope_coeff_s(hgl::MultiIndex(std::move(alpha)), s, r));
      },
      py::arg("alpha"), py::arg("s"), py::arg("r"));
  m.def(
      "log_envelope_norm_s", [](int n, double s, double r) { return log_of(hgl::envelope_norm_s(n, s, r)); },
      py::arg("n"), py::arg("s"), py::arg("r"));

  m.def(
      "make_preset",
      [](const std::string& spec, int d, int max_degree) { return hgl::make_preset(spec, d, max_degree).series; },
      py::arg("spec"), py::arg("dimension") = 1, py::arg("max_degree") = 20);

  // Reports cross the boundary as JSON text; the Python package decodes them.
  m.def(
      "classify_json", [](const hgl::HermiteSeries& s) { return hgl::to_json(hgl::classify(s)).dump(); },
      py::arg("series"));
  m.def(
      "cross_validate_json",
      [](const hgl::HermiteSeries& s, double sigma, int n_max) {
        return hgl::to_json(hgl::cross_validate(s, sigma, n_max)).dump();
      },
      py::arg("series"), py::arg("sigma"), py::arg("n_max") = 40);
  m.def(
      "check_lemma_g_h_json", [](double R) { return hgl::to_json(hgl::check_lemma_g_h(R)).dump(); }, py::arg("R"));
  m.def(
      "check_lemma_F_monotone_json", [](double sigma) { return hgl::to_json(hgl::check_lemma_F_monotone(sigma)).dump(); },
      py::arg("sigma"));
  m.def(
      "check_inf_over_t_json",
      [](double r1, double sigma) { return hgl::to_json(hgl::check_inf_over_t(r1, sigma)).dump(); }, py::arg("r1"),
      py::arg("sigma") = 1.0);
  m.def(
      "check_lemma_fsr_json", [](double r) { return hgl::to_json(hgl::check_lemma_fsr(r)).dump(); }, py::arg("r"));

  py::register_exception<hgl::InputError>(m, "InputError", PyExc_ValueError);
}
