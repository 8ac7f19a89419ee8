#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cxbox/multivariate.hpp"
#include "cxbox/sampled_field.hpp"

namespace cxbox {

using SymbolFn = std::function<Complex(std::span<const double>)>;

// Symmetric frequency box [-omega_max_a, omega_max_a) per axis with bins_a
// samples (bins must be even so the DC frequency lands on a grid point).
struct FrequencyGrid {
  std::vector<double> omega_max;
  std::vector<std::size_t> bins;
  // Decay exponent hint alpha = min Re(z_j); sharpens the tail-energy
  // estimate. Without it the check falls back to a conservative bound.
  std::optional<double> min_degree_re;
};

// Inverse-DFT samples of a symbol on the dual spatial grid (spacing
// pi/omega_max per axis, origin 0). The DC bin is pinned to dc_value.
// Throws TailBudgetError when the estimated out-of-box spectral energy
// exceeds tail_budget times the total.
SampledField sample_from_symbol(const SymbolFn& symbol,
                                const FrequencyGrid& grid, Complex dc_value,
                                double tail_budget = 1e-6);

// Smallest power-of-two multiple of pi (per axis, uniform) at which the
// estimated spectral tail of the box-spline symbol drops under tail_budget.
double choose_omega_max(const DegreeVector& zv, const DirectionSet& m,
                        double tail_budget = 1e-6);

// Envelope slope of |Bhat| along rays, fitted on log-log shell maxima.
struct RayFit {
  std::vector<double> direction;
  double slope;     // d log|Bhat| / d log r
  double residual;  // rms of the linear fit
};
struct DecayReport {
  double alpha_est;     // min over rays of (-slope - 1)
  double alpha_theory;  // min_j Re(z_j)
  std::vector<RayFit> rays;
};

// Decay-law fit for diagonal M (the documented scope); coordinate axes are
// always probed, extra rays interpolate between them. Throws ScopeError for
// non-diagonal M.
DecayReport estimate_decay(const DegreeVector& zv, const DirectionSet& m,
                           int ray_count, double omega_min, double omega_max);

// Sobolev supremum alpha + 1/2 and the Holder pair (l, gamma) available
// from the embedding when alpha + 1/2 >= d/2. Diagonal M only.
struct SmoothnessReport {
  double sobolev_sup;
  bool has_holder;
  int holder_l;
  double holder_gamma;
};
SmoothnessReport smoothness_exponents(const DegreeVector& zv,
                                      const DirectionSet& m);

}  // namespace cxbox
