#include "cxbox/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cxbox/quadrature.hpp"
#include "cxbox/univariate.hpp"

namespace cxbox {

double DegreeVector::min_re() const {
  double m = z.empty() ? 0.0 : z[0].real();
  for (const Complex& v : z) m = std::min(m, v.real());
  return m;
}

bool DegreeVector::all_integer() const {
  return std::all_of(z.begin(), z.end(), [](Complex v) {
    return v.imag() == 0.0 && v.real() == std::round(v.real());
  });
}

DegreeVector DegreeVector::lowered(int j) const {
  DegreeVector out(*this);
  out.z[j] -= 1.0;
  return out;
}

DegreeVector DegreeVector::lowered_all() const {
  DegreeVector out(*this);
  for (Complex& v : out.z) v -= 1.0;
  return out;
}

DegreeVector DegreeVector::drop_last() const {
  DegreeVector out(*this);
  out.z.pop_back();
  return out;
}

DegreeVector DegreeVector::convolved_with(const DegreeVector& w) const {
  DegreeVector out(*this);
  for (int j = 0; j < size(); ++j) out.z[j] += w.z[j] + 1.0;
  return out;
}

void DegreeVector::check(const DirectionSet* m) const {
  if (z.empty()) throw ValidationError("degree vector: empty");
  for (const Complex& v : z) {
    if (!(v.real() > -1.0)) {
      throw ValidationError("degree vector: Re(z_j) must be > -1");
    }
  }
  if (m != nullptr && m->count() != size()) {
    throw ValidationError(
        "degree vector: length must equal the direction-set column count");
  }
}

Complex tensor_kernel_eval(const DegreeVector& zv, std::span<const double> t) {
  Complex prod(1.0, 0.0);
  for (int j = 0; j < zv.size(); ++j) {
    if (t[j] <= 0.0) return {0.0, 0.0};
    prod *= truncated_power_kernel(zv.z[j], t[j]);
  }
  return prod;
}

Complex truncated_power_symbol(const DegreeVector& zv, const DirectionSet& m,
                               std::span<const double> omega) {
  zv.check(&m);
  Complex prod(1.0, 0.0);
  for (int j = 0; j < zv.size(); ++j) {
    const double u = m.dot(j, omega);
    if (u == 0.0) {
      throw UnsupportedEvaluationError(
          "truncated_power_symbol: omega orthogonal to a direction (pole)");
    }
    prod *= principal_pow(Complex(0.0, u), -(zv.z[j] + 1.0));
  }
  return prod;
}

Complex truncated_power_eval_invertible(const DegreeVector& zv,
                                        const DirectionSet& m,
                                        std::span<const double> x) {
  zv.check(&m);
  const std::vector<double> t = m.solve(x);
  return tensor_kernel_eval(zv, t) / std::abs(m.determinant());
}

Complex boxspline_symbol(const DegreeVector& zv, const DirectionSet& m,
                         std::span<const double> omega) {
  zv.check(&m);
  Complex prod(1.0, 0.0);
  for (int j = 0; j < zv.size(); ++j) {
    const double u = m.dot(j, omega);
    if (u == 0.0) continue;  // Omega_j = 1 by continuous extension
    const Complex w = omega_symbol(u);
    if (w == Complex(0.0, 0.0)) return {0.0, 0.0};  // Re(z_j)+1 > 0
    prod *= principal_pow(w, zv.z[j] + 1.0);
  }
  return prod;
}

Complex boxspline_eval_invertible(const DegreeVector& zv,
                                  const DirectionSet& m,
                                  std::span<const double> y) {
  zv.check(&m);
  const std::vector<double> t = m.solve(y);
  Complex prod(1.0, 0.0);
  for (int j = 0; j < zv.size(); ++j) {
    if (t[j] <= 0.0) return {0.0, 0.0};
    prod *= bspline_eval(zv.z[j], t[j]);
    if (prod == Complex(0.0, 0.0)) return prod;
  }
  return prod / std::abs(m.determinant());
}

Complex boxspline_recurrence_eval(const DegreeVector& zv,
                                  const DirectionSet& m,
                                  std::span<const double> x,
                                  double quad_eps) {
  zv.check(&m);
  const int n = zv.size() - 1;
  const Complex zn = zv.z[n];

  if (m.square()) {
    // Removing a column of a square M drops rank; the reduced spline is a
    // line distribution and the u-integral collapses onto u = t_n.
    const std::vector<double> t = m.solve(x);
    Complex prod = bspline_eval(zn, t[n]);
    for (int j = 0; j < n; ++j) {
      prod *= bspline_eval(zv.z[j], t[j]);
    }
    return prod / std::abs(m.determinant());
  }

  DirectionSet reduced = m.drop_last();  // throws if rank drops
  const DegreeVector zr = zv.drop_last();
  const auto& mn = m.column(n);

  std::function<Complex(double)> integrand = [&](double u) -> Complex {
    std::vector<double> shifted(x.begin(), x.end());
    for (int i = 0; i < m.dim(); ++i) shifted[i] -= u * mn[i];
    const Complex inner =
        reduced.square()
            ? boxspline_eval_invertible(zr, reduced, shifted)
            : boxspline_recurrence_eval(zr, reduced, shifted, quad_eps);
    return bspline_eval(zn, u) * inner;
  };

  // Lattice kinks of the reduced spline along the integration line: for
  // square M', (M'^{-1}(x - u m_n))_j crosses an integer at
  // u = (t0_j - k) / r_j.
  std::vector<double> t0, rate;
  if (reduced.square()) {
    t0 = reduced.solve(x);
    std::vector<double> mn_copy(mn.begin(), mn.end());
    rate = reduced.solve(mn_copy);
  }
  auto block_knots = [&](double lo, double hi) {
    std::vector<double> knots;
    for (std::size_t j = 0; j < rate.size(); ++j) {
      if (rate[j] == 0.0) continue;
      const double s_lo = t0[j] - rate[j] * lo;
      const double s_hi = t0[j] - rate[j] * hi;
      const double s_min = std::min(s_lo, s_hi);
      const double s_max = std::max(s_lo, s_hi);
      for (double k = std::ceil(s_min); k <= std::floor(s_max); k += 1.0) {
        const double u = (t0[j] - k) / rate[j];
        if (u > lo && u < hi) knots.push_back(u);
      }
    }
    std::sort(knots.begin(), knots.end());
    return knots;
  };

  // Integrate over unit blocks until two consecutive blocks contribute
  // less than quad_eps (the B_{z_n} envelope decays polynomially).
  constexpr double kMaxTail = 64.0;
  Complex total(0.0, 0.0);
  int quiet_blocks = 0;
  for (double lo = 0.0; lo < kMaxTail && quiet_blocks < 2; lo += 1.0) {
    const Complex block =
        integrate(integrand, lo, lo + 1.0, quad_eps, block_knots(lo, lo + 1.0));
    total += block;
    if (std::abs(block) < quad_eps) {
      ++quiet_blocks;
    } else {
      quiet_blocks = 0;
    }
  }
  return total;
}

Complex difference_representation_eval(const DegreeVector& zv,
                                       const DirectionSet& m,
                                       std::span<const double> x) {
  zv.check(&m);
  if (!m.square()) {
    throw NotSquareError("difference_representation_eval: M must be square");
  }
  for (const Complex& v : zv.z) {
    if (!pointwise_evaluable(v)) {
      throw UnsupportedEvaluationError(
          "difference_representation_eval: degrees must be pointwise-evaluable");
    }
  }
  const std::vector<double> t = m.solve(x);
  const int n1 = zv.size();
  std::vector<int> last(n1);
  for (int j = 0; j < n1; ++j) {
    if (t[j] <= 0.0) return {0.0, 0.0};
    last[j] = static_cast<int>(std::floor(t[j]));
  }
  // Per-axis signed binomial weights.
  std::vector<std::vector<Complex>> weights(n1);
  for (int j = 0; j < n1; ++j) {
    weights[j].resize(last[j] + 1);
    Complex coeff(1.0, 0.0);
    double sign = 1.0;
    const Complex a = zv.z[j] + 1.0;
    for (int k = 0; k <= last[j]; ++k) {
      weights[j][k] = sign * coeff;
      coeff *= (a - static_cast<double>(k)) / static_cast<double>(k + 1);
      sign = -sign;
    }
  }

  std::vector<int> idx(n1, 0);
  std::vector<double> shifted(m.dim());
  Complex total(0.0, 0.0);
  for (;;) {
    Complex w(1.0, 0.0);
    for (int j = 0; j < n1; ++j) w *= weights[j][idx[j]];
    for (int i = 0; i < m.dim(); ++i) {
      double s = x[i];
      for (int j = 0; j < n1; ++j) s -= idx[j] * m.column(j)[i];
      shifted[i] = s;
    }
    total += w * truncated_power_eval_invertible(zv, m, shifted);

    int axis = n1 - 1;
    while (axis >= 0 && ++idx[axis] > last[axis]) {
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return total;
}

double partition_of_unity_residual(const DegreeVector& zv,
                                   const DirectionSet& m,
                                   std::span<const double> x, int radius) {
  zv.check(&m);
  const int d = m.dim();
  std::vector<int> k(d, -radius);
  std::vector<double> shifted(d);
  Complex sum(0.0, 0.0);
  for (;;) {
    for (int i = 0; i < d; ++i) shifted[i] = x[i] - k[i];
    sum += boxspline_eval_invertible(zv, m, shifted);

    int axis = d - 1;
    while (axis >= 0 && ++k[axis] > radius) {
      k[axis] = -radius;
      --axis;
    }
    if (axis < 0) break;
  }
  return std::abs(sum - 1.0);
}

PartitionSweep partition_of_unity_adaptive(const DegreeVector& zv,
                                           const DirectionSet& m,
                                           std::span<const double> x,
                                           int max_radius) {
  PartitionSweep sweep;
  sweep.radius = 1;
  sweep.residual = partition_of_unity_residual(zv, m, x, 1);
  sweep.history.push_back(sweep.residual);
  int stalled = 0;
  for (int r = 2; r <= max_radius; r *= 2) {
    if (sweep.residual <= 1e-14) break;  // machine floor
    const double res = partition_of_unity_residual(zv, m, x, r);
    sweep.history.push_back(res);
    // The early radii only accumulate support mass slowly; declare
    // convergence only after two consecutive sub-decade doublings AND once
    // the residual has moved well off its starting level.
    stalled = (res < 0.1 * sweep.residual) ? 0 : stalled + 1;
    if (res < sweep.residual) {
      sweep.radius = r;
      sweep.residual = res;
    }
    if (stalled >= 2 && sweep.residual <= 0.01 * sweep.history.front()) break;
  }
  return sweep;
}

SymbolPair derivative_symbol_check(const DegreeVector& zv,
                                   const DirectionSet& m, int j,
                                   std::span<const double> omega) {
  zv.check(&m);
  const double u = m.dot(j, omega);
  SymbolPair out;
  out.lhs = Complex(0.0, u) * boxspline_symbol(zv, m, omega);
  out.rhs = (1.0 - std::exp(Complex(0.0, -u))) *
            boxspline_symbol(zv.lowered(j), m, omega);
  return out;
}

}  // namespace cxbox
