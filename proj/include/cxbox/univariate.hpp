#pragma once

#include <complex>
#include <functional>

#include "cxbox/quadrature.hpp"
#include "cxbox/special_functions.hpp"

namespace cxbox {

// t_+^z: t^{Re z} e^{i Im z log t} for t > 0, else 0 (including t = 0).
Complex truncated_power(Complex z, double t);

// k_z(t) = t_+^z / Gamma(z+1).
Complex truncated_power_kernel(Complex z, double t);

// Backward difference of complex degree z+1 applied to f at t:
//   sum_k (-1)^k binom(z+1, k) f(t - k).
// If f_causal (f vanishes on (-inf, 0]) the sum terminates at floor(t);
// otherwise it is truncated where the binomial tail drops below eps, which
// is sound for bounded f. Throws DivergentSeriesError for Re(z) <= -1.
Complex backward_difference(Complex z, const ScalarFn& f, double t,
                            bool f_causal, double eps = 1e-12);

// True when B_z admits pointwise evaluation: Re(z) > 0, or z an exact
// non-negative integer (the piecewise-polynomial case).
bool pointwise_evaluable(Complex z);

// B_z(t) = sum_{k=0}^{floor(t)} (-1)^k binom(z+1, k) k_z(t - k).
// Throws UnsupportedEvaluationError outside the pointwise regime.
Complex bspline_eval(Complex z, double t);

// Recurrence route: (t/z) B_{z-1}(t) + ((z+1-t)/z) B_{z-1}(t-1).
// Requires Re(z) > 1 (or integer z >= 1) so both children are evaluable.
Complex bspline_recurrence_eval(Complex z, double t);

// Fourier symbol Omega(w)^{z+1}, Omega(w) = (1 - e^{-iw})/(iw), Omega(0) = 1;
// returns 0 at the zeros of Omega.
Complex bspline_fourier(Complex z, double omega);

// Omega(w) evaluated stably as sinc(w/2) e^{-iw/2}.
Complex omega_symbol(double omega);

// Split of the symbol into the real-degree spectrum, a unimodular
// modulation, and a positive damping factor; the product reproduces
// bspline_fourier. Throws UndefinedFactorizationError at zeros of Omega.
struct SpectrumFactors {
  Complex base;        // Omega(w)^{Re z + 1}
  Complex modulation;  // e^{i Im z ln|Omega(w)|}
  double damping;      // e^{-Im z arg Omega(w)}
};
SpectrumFactors spectrum_factors(Complex z, double omega);

// Adaptive quadrature of (f * g)(t) = int f(s) g(t-s) ds over the hinted
// support, with the initial partition split at the integer-lattice kinks of
// both factors.
Complex convolve_quadrature(const ScalarFn& f, const ScalarFn& g, double t,
                            double support_lo, double support_hi,
                            double abs_tol = 1e-8);

}  // namespace cxbox
