#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cxbox/multivariate.hpp"

namespace cxbox {

// Two-scale mask h_z(k) of a complex box spline on integer directions.
// Entries below eps * max|h| are not stored; for integer degrees the
// support is finite and exact. The scalar normalization is enforced so that
// the stored coefficients sum to 2^d (the DC value of the mask symbol);
// the constant claimed by the closed form, 2^{-(sum z_j + n + 1 - d)}, is
// kept alongside for comparison.
struct MaskCoefficients {
  std::map<std::vector<int>, Complex> entries;
  double eps = 0.0;
  DegreeVector degrees;
  std::vector<std::vector<double>> directions;  // validated integer columns
  Complex normalization_enforced{0.0, 0.0};
  Complex normalization_paper{0.0, 0.0};
  std::vector<int> per_axis_truncation;
  double dropped_mass = 0.0;  // |h| mass lost to truncation + pruning

  DirectionSet direction_set() const;
};

// Accumulates prod_j binom(z_j+1, t_j) into buckets k = sum_j t_j m_j with
// per-axis truncation at binomial_tail_index(z_j, eps/(n+1)).
// Throws ValidationError unless M has integer columns.
MaskCoefficients compute_mask(const DegreeVector& zv, const DirectionSet& m,
                              double eps);

// H(w) = sum_k h(k) e^{-i k.w} over stored entries.
Complex mask_symbol(const MaskCoefficients& mask, std::span<const double> omega);

// Frequency-domain residual of the refinement equation:
//   max over samples of |2^d Bhat(2w) - H(w) Bhat(w)| / (|2^d Bhat(2w)| + tiny).
double verify_two_scale(const MaskCoefficients& mask,
                        std::span<const std::vector<double>> omega_samples);

// Deterministic w samples in [-pi, pi]^d staying clear of the zero sets of
// Bhat(2w) (w.m_j near pi Z \ {0}).
std::vector<std::vector<double>> twoscale_omega_samples(const DirectionSet& m,
                                                        int count,
                                                        std::uint64_t seed);

// Canonical JSON: entries as an array of {"k": [...], "re": ..., "im": ...}
// sorted lexicographically by k, wrapped with the defining metadata.
std::string mask_to_json(const MaskCoefficients& mask);
MaskCoefficients mask_from_json(const std::string& text);

}  // namespace cxbox
