#include "cxbox/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cxbox/univariate.hpp"

namespace cxbox {
namespace {

constexpr double kPi = std::numbers::pi;

double radius(std::span<const double> omega) {
  double r2 = 0.0;
  for (double w : omega) r2 += w * w;
  return std::sqrt(r2);
}

// The fractional-equation context admits the boundary Re(z_j) = -1 (the
// spline constructions elsewhere require strictly more).
void check_fractional_degrees(const DegreeVector& zv, const DirectionSet* m) {
  if (zv.z.empty()) throw ValidationError("degree vector: empty");
  for (const Complex& v : zv.z) {
    if (!(v.real() >= -1.0)) {
      throw ValidationError("degree vector: Re(z_j) must be >= -1");
    }
  }
  if (m != nullptr && m->count() != zv.size()) {
    throw ValidationError(
        "degree vector: length must equal the direction-set column count");
  }
}

}  // namespace

double LizorkinWindow::value(double r) const {
  if (r <= inner_radius) return 0.0;
  if (r >= inner_radius + taper) return 1.0;
  const double s = (r - inner_radius) / taper;
  return 0.5 * (1.0 - std::cos(kPi * s));
}

double LizorkinWindow::value_at(std::span<const double> omega) const {
  return value(radius(omega));
}

FractionalOrder FractionalOrder::from_degrees(DegreeVector degrees) {
  check_fractional_degrees(degrees, nullptr);
  FractionalOrder order;
  order.zv = std::move(degrees);
  for (const Complex& z : order.zv.z) {
    const int mj = static_cast<int>(std::ceil(z.real() + 1.0));
    order.m.push_back(mj);
    order.nu.push_back(static_cast<double>(mj) - z);
  }
  return order;
}

SampledField apply_fractional(const FractionalOrder& order, int sign,
                              const SampledField& field,
                              const LizorkinWindow& window) {
  field.check();
  if (field.domain != SampledField::Domain::frequency) {
    throw ValidationError("apply_fractional: expects a frequency-domain field");
  }
  if (field.dim() != order.zv.size()) {
    throw ValidationError(
        "apply_fractional: field dimension must match the degree vector");
  }
  if (sign != 1 && sign != -1) {
    throw ValidationError("apply_fractional: sign must be +1 or -1");
  }

  const int d = field.dim();
  double inner_mass = 0.0;
  double total_mass = 0.0;
  {
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> omega(d);
    for (std::size_t flat = 0; flat < field.values.size(); ++flat) {
      const double mag = std::abs(field.values[flat]);
      total_mass += mag;
      for (int a = 0; a < d; ++a) {
        omega[a] = field.origin[a] + field.spacing[a] * static_cast<double>(idx[a]);
      }
      if (radius(omega) < window.inner_radius) inner_mass += mag;
      int axis = d - 1;
      while (axis >= 0 && ++idx[axis] == field.extents[axis]) {
        idx[axis] = 0;
        --axis;
      }
    }
  }
  if (total_mass > 0.0 && inner_mass > 1e-12 * total_mass) {
    throw WindowViolationError(
        "apply_fractional: spectrum carries mass inside the inner ball");
  }

  SampledField out = field;
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> omega(d);
  for (std::size_t flat = 0; flat < out.values.size(); ++flat) {
    for (int a = 0; a < d; ++a) {
      omega[a] = out.origin[a] + out.spacing[a] * static_cast<double>(idx[a]);
    }
    Complex multiplier(1.0, 0.0);
    for (int a = 0; a < d; ++a) {
      if (omega[a] == 0.0) {
        multiplier = Complex(0.0, 0.0);
        break;
      }
      multiplier *= principal_pow(Complex(0.0, -omega[a]),
                                  static_cast<double>(sign) * order.zv.z[a]);
    }
    out.values[flat] *= multiplier;
    if (radius(omega) < window.inner_radius) {
      out.values[flat] = Complex(0.0, 0.0);
    }
    int axis = d - 1;
    while (axis >= 0 && ++idx[axis] == out.extents[axis]) {
      idx[axis] = 0;
      --axis;
    }
  }
  return out;
}

Complex delta_train_symbol(const DegreeVector& zv, const DirectionSet& m,
                           std::span<const double> omega, int K) {
  check_fractional_degrees(zv, &m);
  Complex prod(1.0, 0.0);
  for (int j = 0; j < zv.size(); ++j) {
    const double u = m.dot(j, omega);
    const Complex step(std::cos(u), -std::sin(u));  // e^{-iu}
    Complex phase(1.0, 0.0);
    Complex coeff(1.0, 0.0);
    double sign = 1.0;
    Complex sum(0.0, 0.0);
    const Complex a = zv.z[j] + 1.0;
    for (int k = 0; k <= K; ++k) {
      sum += sign * coeff * phase;
      coeff *= (a - static_cast<double>(k)) / static_cast<double>(k + 1);
      if (coeff == Complex(0.0, 0.0)) break;
      sign = -sign;
      phase *= step;
    }
    prod *= sum;
  }
  return prod;
}

double verify_spline_equation(const DegreeVector& zv, const DirectionSet& m,
                              std::span<const std::vector<double>> omega_samples,
                              int K) {
  check_fractional_degrees(zv, &m);
  double worst = 0.0;
  for (const auto& omega : omega_samples) {
    // Per-factor (i w.m_j)^{z_j+1} Omega_j^{z_j+1}; assembled here rather
    // than through boxspline_symbol so the boundary Re(z_j) = -1 (factor
    // exponent 0) stays admissible.
    Complex lhs(1.0, 0.0);
    for (int j = 0; j < zv.size(); ++j) {
      const double u = m.dot(j, omega);
      lhs *= principal_pow(Complex(0.0, u), zv.z[j] + 1.0) *
             principal_pow(omega_symbol(u), zv.z[j] + 1.0);
    }
    const Complex rhs = delta_train_symbol(zv, m, omega, K);
    const double denom = std::abs(rhs) + 1e-300;
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

std::vector<std::vector<double>> spline_equation_samples(const DirectionSet& m,
                                                         int count,
                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-2.5, 2.5);
  std::vector<std::vector<double>> samples;
  samples.reserve(count);
  while (static_cast<int>(samples.size()) < count) {
    std::vector<double> omega(m.dim());
    for (double& w : omega) w = uniform(rng);
    bool ok = true;
    for (int j = 0; j < m.count() && ok; ++j) {
      const double u = m.dot(j, omega);
      const double nearest = 2.0 * kPi * std::round(u / (2.0 * kPi));
      if (std::abs(u - nearest) < 0.3) ok = false;
    }
    if (ok) samples.push_back(std::move(omega));
  }
  return samples;
}

SampledField windowed_gaussian_field(std::span<const double> omega_max,
                                     std::span<const std::size_t> bins,
                                     std::span<const double> center,
                                     double sigma,
                                     const LizorkinWindow& window) {
  const int d = static_cast<int>(omega_max.size());
  SampledField field;
  field.domain = SampledField::Domain::frequency;
  field.extents.assign(bins.begin(), bins.end());
  field.origin.resize(d);
  field.spacing.resize(d);
  for (int a = 0; a < d; ++a) {
    field.spacing[a] = 2.0 * omega_max[a] / static_cast<double>(bins[a]);
    // Half-offset grid: no sample lies on a coordinate hyperplane.
    field.origin[a] = -omega_max[a] + 0.5 * field.spacing[a];
  }
  field.values.resize(field.size());
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> omega(d);
  for (std::size_t flat = 0; flat < field.values.size(); ++flat) {
    double q = 0.0;
    for (int a = 0; a < d; ++a) {
      omega[a] = field.origin[a] + field.spacing[a] * static_cast<double>(idx[a]);
      const double dist = omega[a] - center[a];
      q += dist * dist;
    }
    field.values[flat] =
        std::exp(-q / (2.0 * sigma * sigma)) * window.value_at(omega);
    int axis = d - 1;
    while (axis >= 0 && ++idx[axis] == field.extents[axis]) {
      idx[axis] = 0;
      --axis;
    }
  }
  return field;
}

double fractional_roundtrip_residual(const FractionalOrder& order,
                                     const SampledField& field,
                                     const LizorkinWindow& window) {
  const SampledField integrated = apply_fractional(order, -1, field, window);
  const SampledField back = apply_fractional(order, +1, integrated, window);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    worst = std::max(worst, std::abs(back.values[i] - field.values[i]));
    scale = std::max(scale, std::abs(field.values[i]));
  }
  return scale > 0.0 ? worst / scale : worst;
}

double fractional_semigroup_residual(const DegreeVector& za,
                                     const DegreeVector& zb,
                                     const SampledField& field,
                                     const LizorkinWindow& window) {
  const FractionalOrder oa = FractionalOrder::from_degrees(za);
  const FractionalOrder ob = FractionalOrder::from_degrees(zb);
  DegreeVector zsum = za;
  for (int j = 0; j < zsum.size(); ++j) zsum.z[j] += zb.z[j];
  const FractionalOrder osum = FractionalOrder::from_degrees(zsum);

  const SampledField chained =
      apply_fractional(oa, +1, apply_fractional(ob, +1, field, window), window);
  const SampledField direct = apply_fractional(osum, +1, field, window);
  // Per-bin relative: the multiplied fields can sit many orders of
  // magnitude above the input, so a global scale would hide (or fake)
  // roundoff structure.
  double worst = 0.0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const double denom = std::abs(direct.values[i]);
    if (denom == 0.0) {
      worst = std::max(worst, std::abs(chained.values[i]));
    } else {
      worst = std::max(worst,
                       std::abs(chained.values[i] - direct.values[i]) / denom);
    }
  }
  return worst;
}

}  // namespace cxbox
