#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cxbox/multivariate.hpp"
#include "cxbox/sampled_field.hpp"

namespace cxbox {

// Frequency window vanishing identically on |w| < inner_radius with a
// raised-cosine ramp of the given width; the surrogate for Lizorkin
// membership of grid spectra.
struct LizorkinWindow {
  double inner_radius = 1.0;
  double taper = 1.0;

  double value(double r) const;
  double value_at(std::span<const double> omega) const;
};

// Degree vector with the derived integer orders m_j = ceil(Re(z_j) + 1) and
// complementary orders nu_j = m_j - z_j (Re(nu_j) > 0 always holds for
// Re(z_j) > -1).
struct FractionalOrder {
  DegreeVector zv;
  std::vector<int> m;
  std::vector<Complex> nu;

  static FractionalOrder from_degrees(DegreeVector zv);
};

// Applies D^{sign * z} to a frequency-domain field on R^{n+1} coordinates
// as the pointwise multiplier prod_j (-i w_j)^{sign * z_j} (principal
// branch; the -i orientation matches the anti-causal kernels, see the 1D
// kernel cross-check in the tests). Bins with any w_j = 0 are zeroed.
// Throws WindowViolationError when more than 1e-12 of the spectrum's mass
// lies inside the window's inner ball; the output vanishes there exactly.
SampledField apply_fractional(const FractionalOrder& order, int sign,
                              const SampledField& field,
                              const LizorkinWindow& window);

// Fourier symbol of prod_j grad_{m_j}^{z_j+1} delta, truncated at K terms
// per axis: prod_j sum_{k=0}^{K} (-1)^k binom(z_j+1, k) e^{-i k (w.m_j)}.
Complex delta_train_symbol(const DegreeVector& zv, const DirectionSet& m,
                           std::span<const double> omega, int K);

// Relative residual of the distributional spline equation at the symbol
// level: prod_j (i w.m_j)^{z_j+1} * Bhat_z(w) against the delta train.
double verify_spline_equation(const DegreeVector& zv, const DirectionSet& m,
                              std::span<const std::vector<double>> omega_samples,
                              int K);

// Deterministic samples keeping every w.m_j away from 2 pi Z (zero sets of
// both sides).
std::vector<std::vector<double>> spline_equation_samples(const DirectionSet& m,
                                                         int count,
                                                         std::uint64_t seed);

// Windowed-Gaussian frequency field on a half-offset grid (no bin touches
// a coordinate hyperplane). The spectrum is a Gaussian bump centered at
// `center` with width `sigma`, multiplied by the window.
SampledField windowed_gaussian_field(std::span<const double> omega_max,
                                     std::span<const std::size_t> bins,
                                     std::span<const double> center,
                                     double sigma,
                                     const LizorkinWindow& window);

// max |D^{z} D^{-z} f - f| / max |f| on the given windowed field.
double fractional_roundtrip_residual(const FractionalOrder& order,
                                     const SampledField& field,
                                     const LizorkinWindow& window);

// max |D^{z} D^{zbar} f - D^{z + zbar} f| / max |f|.
double fractional_semigroup_residual(const DegreeVector& za,
                                     const DegreeVector& zb,
                                     const SampledField& field,
                                     const LizorkinWindow& window);

}  // namespace cxbox
