#pragma once

#include <complex>

#include "cxbox/errors.hpp"

namespace cxbox {

using Complex = std::complex<double>;

// Principal-branch complex power with arg(w) restricted to [-pi, pi):
// an argument of exactly pi is mapped to -pi before exponentiation.
// w == 0 returns 0 (valid for Re(a) > 0, which is the only regime callers use).
Complex principal_pow(Complex w, Complex a);

// Principal log with the same [-pi, pi) argument convention.
Complex principal_log(Complex w);

// log Gamma(z) via a fixed-coefficient Lanczos sum, reflection for
// Re(z) < 0.5. exp(log_gamma(z)) matches Gamma(z) to ~1e-13 relative; the
// imaginary part may differ from the analytic continuation by multiples of
// 2*pi on the reflected half-plane. Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

// Generalized binomial coefficient binom(a, k) = a(a-1)...(a-k+1)/k!,
// computed as a descending product. Never calls gamma, so it is exact at
// the poles of Gamma(a+1-k). Overflow for extreme k saturates to inf.
Complex complex_binomial(Complex a, int k);

// Smallest K such that sum_{k>K} |binom(z+1, k)| < eps, using the
// k^{-(Re(z)+2)} decay of the terms. Throws DivergentSeriesError for
// Re(z) <= -1.
int binomial_tail_index(Complex z, double eps);

}  // namespace cxbox
