#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cxbox/fractional.hpp"
#include "cxbox/refinement.hpp"
#include "cxbox/spectral.hpp"
#include "cxbox/univariate.hpp"
#include "cxbox/verification.hpp"

namespace py = pybind11;

using cxbox::Complex;
using cxbox::DegreeVector;
using cxbox::DirectionSet;

namespace {

DegreeVector degrees(const std::vector<Complex>& z) {
  DegreeVector zv(z);
  zv.check();
  return zv;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "box splines of complex degree";

  py::register_exception<cxbox::Error>(m, "CxboxError", PyExc_RuntimeError);

  // scalar special functions
  m.def("log_gamma", &cxbox::log_gamma, py::arg("z"));
  m.def("gamma", &cxbox::gamma, py::arg("z"));
  m.def("complex_binomial", &cxbox::complex_binomial, py::arg("a"), py::arg("k"));
  m.def("binomial_tail_index", &cxbox::binomial_tail_index, py::arg("z"),
        py::arg("eps"));

  // univariate splines
  m.def("truncated_power", &cxbox::truncated_power, py::arg("z"), py::arg("t"));
  m.def("truncated_power_kernel", &cxbox::truncated_power_kernel, py::arg("z"),
        py::arg("t"));
  m.def("bspline_eval", &cxbox::bspline_eval, py::arg("z"), py::arg("t"));
  m.def("bspline_recurrence_eval", &cxbox::bspline_recurrence_eval, py::arg("z"),
        py::arg("t"));
  m.def("bspline_fourier", &cxbox::bspline_fourier, py::arg("z"),
        py::arg("omega"));
  m.def(
      "spectrum_factors",
      [](Complex z, double omega) {
        const auto f = cxbox::spectrum_factors(z, omega);
        return py::make_tuple(f.base, f.modulation, f.damping);
      },
      py::arg("z"), py::arg("omega"),
      "(base, modulation, damping); their product is bspline_fourier");

  // direction sets
  py::class_<DirectionSet>(m, "DirectionSet")
      .def(py::init([](std::vector<std::vector<double>> columns) {
             return DirectionSet::validate(std::move(columns));
           }),
           py::arg("columns"))
      .def_property_readonly("dim", &DirectionSet::dim)
      .def_property_readonly("count", &DirectionSet::count)
      .def_property_readonly("columns", &DirectionSet::columns)
      .def_property_readonly("integer_columns", &DirectionSet::integer_columns)
      .def_property_readonly("sign_convention_ok",
                             &DirectionSet::sign_convention_ok)
      .def_property_readonly("square", &DirectionSet::square)
      .def("determinant", &DirectionSet::determinant)
      .def("inverse", &DirectionSet::inverse)
      .def("support_box", &DirectionSet::support_box)
      .def("to_json", &DirectionSet::to_json_string)
      .def_static("from_json", &DirectionSet::from_json_string);

  // multivariate evaluation and symbols
  m.def(
      "tensor_kernel_eval",
      [](const std::vector<Complex>& z, const std::vector<double>& t) {
        return cxbox::tensor_kernel_eval(degrees(z), t);
      },
      py::arg("degrees"), py::arg("t"));
  m.def(
      "truncated_power_symbol",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& w) {
        return cxbox::truncated_power_symbol(degrees(z), m_, w);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("omega"));
  m.def(
      "truncated_power_eval",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& x) {
        return cxbox::truncated_power_eval_invertible(degrees(z), m_, x);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("x"));
  m.def(
      "boxspline_symbol",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& w) {
        return cxbox::boxspline_symbol(degrees(z), m_, w);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("omega"));
  m.def(
      "boxspline_eval",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& x) {
        return cxbox::boxspline_eval_invertible(degrees(z), m_, x);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("x"));
  m.def(
      "boxspline_recurrence_eval",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& x, double quad_eps) {
        return cxbox::boxspline_recurrence_eval(degrees(z), m_, x, quad_eps);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("x"),
      py::arg("quad_eps") = 1e-9);
  m.def(
      "difference_representation_eval",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& x) {
        return cxbox::difference_representation_eval(degrees(z), m_, x);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("x"));
  m.def(
      "partition_of_unity_residual",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& x, int radius) {
        return cxbox::partition_of_unity_residual(degrees(z), m_, x, radius);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("x"), py::arg("radius"));
  m.def(
      "partition_of_unity_adaptive",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& x, int max_radius) {
        const auto sweep =
            cxbox::partition_of_unity_adaptive(degrees(z), m_, x, max_radius);
        return py::make_tuple(sweep.radius, sweep.residual, sweep.history);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("x"),
      py::arg("max_radius") = 64,
      "(radius, residual, history of tried radii)");
  m.def(
      "derivative_symbol_check",
      [](const std::vector<Complex>& z, const DirectionSet& m_, int j,
         const std::vector<double>& w) {
        const auto pair = cxbox::derivative_symbol_check(degrees(z), m_, j, w);
        return py::make_tuple(pair.lhs, pair.rhs);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("j"), py::arg("omega"));

  // sampling and analysis
  m.def(
      "sample_boxspline",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         double omega_max, std::size_t bins, double tail_budget) {
        const DegreeVector zv = degrees(z);
        cxbox::FrequencyGrid grid;
        grid.omega_max.assign(m_.dim(), omega_max);
        grid.bins.assign(m_.dim(), bins);
        grid.min_degree_re = zv.min_re();
        auto symbol = [&](std::span<const double> w) {
          return cxbox::boxspline_symbol(zv, m_, w);
        };
        const auto field =
            cxbox::sample_from_symbol(symbol, grid, Complex(1.0, 0.0), tail_budget);
        return py::make_tuple(field.origin, field.spacing, field.extents,
                              field.values);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("omega_max"),
      py::arg("bins"), py::arg("tail_budget") = 1e-6,
      "(origin, spacing, extents, row-major values)");
  m.def(
      "estimate_decay",
      [](const std::vector<Complex>& z, const DirectionSet& m_, int ray_count,
         double omega_min, double omega_max) {
        const auto report =
            cxbox::estimate_decay(degrees(z), m_, ray_count, omega_min, omega_max);
        py::list rays;
        for (const auto& ray : report.rays) {
          rays.append(py::make_tuple(ray.direction, ray.slope, ray.residual));
        }
        return py::make_tuple(report.alpha_est, report.alpha_theory, rays);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("ray_count") = 4,
      py::arg("omega_min") = 1e2, py::arg("omega_max") = 1e4,
      "(alpha_est, alpha_theory, rays)");
  m.def(
      "smoothness_exponents",
      [](const std::vector<Complex>& z, const DirectionSet& m_) {
        const auto r = cxbox::smoothness_exponents(degrees(z), m_);
        return py::make_tuple(
            r.sobolev_sup,
            r.has_holder ? py::object(py::make_tuple(r.holder_l, r.holder_gamma))
                         : py::object(py::none()));
      },
      py::arg("degrees"), py::arg("directions"),
      "(sobolev_sup, (l, gamma) or None)");

  // two-scale masks
  py::class_<cxbox::MaskCoefficients>(m, "Mask")
      .def_property_readonly("eps",
                             [](const cxbox::MaskCoefficients& mask) {
                               return mask.eps;
                             })
      .def_property_readonly("normalization_enforced",
                             [](const cxbox::MaskCoefficients& mask) {
                               return mask.normalization_enforced;
                             })
      .def_property_readonly("normalization_paper",
                             [](const cxbox::MaskCoefficients& mask) {
                               return mask.normalization_paper;
                             })
      .def_property_readonly("dropped_mass",
                             [](const cxbox::MaskCoefficients& mask) {
                               return mask.dropped_mass;
                             })
      .def("entries",
           [](const cxbox::MaskCoefficients& mask) {
             py::dict out;
             for (const auto& [k, h] : mask.entries) {
               out[py::tuple(py::cast(k))] = h;
             }
             return out;
           })
      .def("to_json", &cxbox::mask_to_json)
      .def_static("from_json", &cxbox::mask_from_json);
  m.def(
      "compute_mask",
      [](const std::vector<Complex>& z, const DirectionSet& m_, double eps) {
        return cxbox::compute_mask(degrees(z), m_, eps);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("eps") = 1e-8);
  m.def(
      "mask_symbol",
      [](const cxbox::MaskCoefficients& mask, const std::vector<double>& w) {
        return cxbox::mask_symbol(mask, w);
      },
      py::arg("mask"), py::arg("omega"));
  m.def(
      "verify_two_scale",
      [](const cxbox::MaskCoefficients& mask, int samples, std::uint64_t seed) {
        const auto omegas =
            cxbox::twoscale_omega_samples(mask.direction_set(), samples, seed);
        return cxbox::verify_two_scale(mask, omegas);
      },
      py::arg("mask"), py::arg("samples") = 64, py::arg("seed") = 1);

  // fractional side
  m.def(
      "delta_train_symbol",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::vector<double>& w, int K) {
        return cxbox::delta_train_symbol(degrees(z), m_, w, K);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("omega"), py::arg("K"));
  m.def(
      "verify_spline_equation",
      [](const std::vector<Complex>& z, const DirectionSet& m_, int samples,
         std::uint64_t seed, int K) {
        const auto omegas = cxbox::spline_equation_samples(m_, samples, seed);
        return cxbox::verify_spline_equation(degrees(z), m_, omegas, K);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("samples") = 100,
      py::arg("seed") = 1, py::arg("K") = 64);

  // verification suites (the same residual runners behind `cxbox verify`)
  m.def(
      "verify",
      [](const std::vector<Complex>& z, const DirectionSet& m_,
         const std::string& suite, double eps, std::uint64_t seed) {
        const DegreeVector zv = degrees(z);
        cxbox::VerificationReport report;
        auto append = [&report](const cxbox::VerificationReport& part) {
          report.checks.insert(report.checks.end(), part.checks.begin(),
                               part.checks.end());
        };
        if (suite == "convolution" || suite == "all")
          append(cxbox::verify_convolution(zv, m_, seed));
        if (suite == "pou" || suite == "all")
          append(cxbox::verify_partition_of_unity(zv, m_, seed));
        if (suite == "twoscale" || suite == "all")
          append(cxbox::verify_twoscale(zv, m_, eps, seed));
        if (suite == "derivative" || suite == "all")
          append(cxbox::verify_derivative(zv, m_, seed));
        if (suite == "fractional" || suite == "all")
          append(cxbox::verify_fractional(zv, m_, eps, seed));
        if (report.checks.empty()) {
          throw cxbox::ValidationError("verify: unknown suite " + suite);
        }
        return report.to_json(seed);
      },
      py::arg("degrees"), py::arg("directions"), py::arg("suite") = "all",
      py::arg("eps") = 1e-8, py::arg("seed") = 20240901ULL,
      "JSON report with per-check residuals");
}
