#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cxbox/directions.hpp"
#include "cxbox/special_functions.hpp"

namespace cxbox {

// Degree vector z = (z_0, ..., z_n), positionally aligned with the columns
// of a DirectionSet. Re(z_j) > -1 throughout.
struct DegreeVector {
  std::vector<Complex> z;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<Complex> entries) : z(std::move(entries)) {}
  DegreeVector(std::initializer_list<Complex> entries) : z(entries) {}

  int size() const { return static_cast<int>(z.size()); }
  double min_re() const;
  bool all_integer() const;

  // z with entry j lowered by one.
  DegreeVector lowered(int j) const;
  // z with every entry lowered by one.
  DegreeVector lowered_all() const;
  // z with the last entry removed.
  DegreeVector drop_last() const;
  // Componentwise z + w + 1 (convolution semigroup index).
  DegreeVector convolved_with(const DegreeVector& w) const;

  // Throws ValidationError unless Re(z_j) > -1 for all j and, when a
  // direction set is supplied, the lengths agree.
  void check(const DirectionSet* m = nullptr) const;
};

// Tensor kernel k_z(t) = prod_j k_{z_j}(t_j); 0 if any t_j <= 0.
Complex tensor_kernel_eval(const DegreeVector& zv, std::span<const double> t);

// Fourier symbol of the multivariate truncated power:
// prod_j (i w.m_j)^{-(z_j+1)}. Throws UnsupportedEvaluationError when some
// w.m_j = 0 (pole of the symbol).
Complex truncated_power_symbol(const DegreeVector& zv, const DirectionSet& m,
                               std::span<const double> omega);

// T_z(x|M) = k_z(M^{-1} x) / |det M| for square invertible M.
Complex truncated_power_eval_invertible(const DegreeVector& zv,
                                        const DirectionSet& m,
                                        std::span<const double> x);

// Fourier symbol of the complex box spline: prod_j Omega_j(w)^{z_j+1} with
// Omega_j(w) = (1 - e^{-i w.m_j})/(i w.m_j), continuously extended to 1 at
// w.m_j = 0; each factor uses the principal branch with arg in [-pi, pi).
Complex boxspline_symbol(const DegreeVector& zv, const DirectionSet& m,
                         std::span<const double> omega);

// B_z(y|M) = (prod_j B_{z_j}((M^{-1}y)_j)) / |det M| for square invertible
// M. Requires every degree pointwise-evaluable (Re > 0 or exact integer).
Complex boxspline_eval_invertible(const DegreeVector& zv,
                                  const DirectionSet& m,
                                  std::span<const double> y);

// Recurrence route: int_0^inf B_{z_n}(u) B_{z\z_n}(x - u m_n | M\m_n) du.
// When M\m_n still spans R^d the integral is evaluated by adaptive
// quadrature with the tail cut where the integrand falls below quad_eps;
// when M itself is square the line distribution collapses the integral onto
// u = (M^{-1}x)_n and the reduced tensor value is returned directly.
Complex boxspline_recurrence_eval(const DegreeVector& zv,
                                  const DirectionSet& m,
                                  std::span<const double> x, double quad_eps);

// Backward-difference representation: nested truncated sums
// sum_{k_0..k_n} prod_j (-1)^{k_j} binom(z_j+1, k_j) T_z(x - sum k_j m_j|M).
// Causality of the kernel terminates each axis at floor((M^{-1}x)_j).
Complex difference_representation_eval(const DegreeVector& zv,
                                       const DirectionSet& m,
                                       std::span<const double> x);

// |sum_{|k|_inf <= radius} B_z(x - k|M) - 1|.
double partition_of_unity_residual(const DegreeVector& zv,
                                   const DirectionSet& m,
                                   std::span<const double> x, int radius);

// Doubles the radius until the residual stops improving by 10x or the hard
// cap is reached; returns the best residual seen and its radius.
struct PartitionSweep {
  int radius;
  double residual;
  std::vector<double> history;  // residual at each tried radius
};
PartitionSweep partition_of_unity_adaptive(const DegreeVector& zv,
                                           const DirectionSet& m,
                                           std::span<const double> x,
                                           int max_radius = 64);

// Fourier-side first-derivative identity: lhs = (i w.m_j) Bhat_z, rhs =
// (1 - e^{-i w.m_j}) Bhat_{z - e_j}.
struct SymbolPair {
  Complex lhs;
  Complex rhs;
};
SymbolPair derivative_symbol_check(const DegreeVector& zv,
                                   const DirectionSet& m, int j,
                                   std::span<const double> omega);

}  // namespace cxbox
