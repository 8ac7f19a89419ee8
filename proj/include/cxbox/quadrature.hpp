#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "cxbox/errors.hpp"

namespace cxbox {

using Complex = std::complex<double>;
using ScalarFn = std::function<Complex(double)>;

// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued integrand
// over [a, b]. interior_knots are points where the integrand kinks (lattice
// points of truncated powers); the initial partition splits there.
// Throws QuadratureError if the error estimate cannot be brought under
// abs_tol within the refinement budget.
Complex integrate(const ScalarFn& f, double a, double b, double abs_tol,
                  std::span<const double> interior_knots = {});

// Convenience: integer knots of f(s) and g(t - s) inside [a, b].
std::vector<double> lattice_knots(double a, double b, double t);

}  // namespace cxbox
