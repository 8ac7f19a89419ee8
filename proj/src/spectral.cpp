#include "cxbox/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "cxbox/parallel.hpp"
#include "cxbox/univariate.hpp"

namespace cxbox {
namespace {

constexpr double kPi = std::numbers::pi;

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

void inverse_dft_inplace(SampledField& field) {
  std::vector<int> n(field.extents.begin(), field.extents.end());
  fftw_complex* data = reinterpret_cast<fftw_complex*>(field.values.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft(field.dim(), n.data(), data, data, FFTW_BACKWARD,
                         FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
}

void check_grid(const FrequencyGrid& grid) {
  const std::size_t d = grid.omega_max.size();
  if (d == 0 || grid.bins.size() != d) {
    throw ValidationError("frequency grid: omega_max/bins length mismatch");
  }
  for (double w : grid.omega_max) {
    if (!(w > 0.0)) throw ValidationError("frequency grid: omega_max <= 0");
  }
  for (std::size_t b : grid.bins) {
    if (b < 4 || b % 2 != 0) {
      throw ValidationError("frequency grid: bins must be even and >= 4");
    }
  }
}

// Out-of-box spectral energy estimate from the outermost slab per axis,
// assuming per-axis power-law decay with exponent alpha + 1.
double tail_energy_estimate(const SampledField& freq, double alpha,
                            const FrequencyGrid& grid) {
  const int d = freq.dim();
  const double decay = 2.0 * alpha + 1.0;
  if (decay <= 0.1) {
    throw TailBudgetError(
        "sample_from_symbol: spectrum decays too slowly for a finite grid "
        "(min Re(z) too close to -1/2)");
  }
  double tail = 0.0;
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t flat = 0; flat < freq.values.size(); ++flat) {
    const double e = std::norm(freq.values[flat]);
    for (int a = 0; a < d; ++a) {
      if (idx[a] == 0 || idx[a] + 1 == freq.extents[a]) {
        // Continuum extrapolation of the outermost slab past omega_max.
        tail += e * grid.omega_max[a] / (decay * freq.spacing[a]);
      }
    }
    int axis = d - 1;
    while (axis >= 0 && ++idx[axis] == freq.extents[axis]) {
      idx[axis] = 0;
      --axis;
    }
  }
  return tail;
}

}  // namespace

SampledField sample_from_symbol(const SymbolFn& symbol,
                                const FrequencyGrid& grid, Complex dc_value,
                                double tail_budget) {
  check_grid(grid);
  const int d = static_cast<int>(grid.bins.size());

  SampledField freq;
  freq.domain = SampledField::Domain::frequency;
  freq.extents = grid.bins;
  freq.origin.resize(d);
  freq.spacing.resize(d);
  for (int a = 0; a < d; ++a) {
    freq.spacing[a] = 2.0 * grid.omega_max[a] / static_cast<double>(grid.bins[a]);
    freq.origin[a] = -grid.omega_max[a];
  }
  freq.values.resize(freq.size());

  parallel_for(freq.values.size(), [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(d, 0);
    // Decode the starting multi-index of this chunk.
    std::size_t rem = begin;
    for (int a = d - 1; a >= 0; --a) {
      idx[a] = rem % freq.extents[a];
      rem /= freq.extents[a];
    }
    std::vector<double> omega(d);
    for (std::size_t flat = begin; flat < end; ++flat) {
      for (int a = 0; a < d; ++a) {
        omega[a] = freq.origin[a] + freq.spacing[a] * static_cast<double>(idx[a]);
      }
      const Complex v = symbol(omega);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ValidationError("sample_from_symbol: symbol not finite on grid");
      }
      freq.values[flat] = v;
      int axis = d - 1;
      while (axis >= 0 && ++idx[axis] == freq.extents[axis]) {
        idx[axis] = 0;
        --axis;
      }
    }
  });

  // Pin the DC bin.
  std::vector<std::size_t> dc(d);
  for (int a = 0; a < d; ++a) dc[a] = freq.extents[a] / 2;
  freq.values[freq.index(dc)] = dc_value;

  double total = 0.0;
  for (const Complex& v : freq.values) total += std::norm(v);
  const double alpha = grid.min_degree_re.value_or(0.0);
  const double tail = tail_energy_estimate(freq, alpha, grid);
  if (tail > tail_budget * total) {
    throw TailBudgetError(
        "sample_from_symbol: estimated out-of-grid energy exceeds budget; "
        "enlarge omega_max");
  }

  // Inverse transform with the centered-grid phase factor.
  inverse_dft_inplace(freq);

  SampledField time;
  time.domain = SampledField::Domain::time;
  time.extents = grid.bins;
  time.origin.assign(d, 0.0);
  time.spacing.resize(d);
  double density = 1.0;
  for (int a = 0; a < d; ++a) {
    time.spacing[a] = kPi / grid.omega_max[a];
    density *= freq.spacing[a] / (2.0 * kPi);
  }
  time.values = std::move(freq.values);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t flat = 0; flat < time.values.size(); ++flat) {
    std::size_t parity = 0;
    for (int a = 0; a < d; ++a) parity += idx[a];
    const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
    time.values[flat] *= sign * density;
    int axis = d - 1;
    while (axis >= 0 && ++idx[axis] == time.extents[axis]) {
      idx[axis] = 0;
      --axis;
    }
  }
  return time;
}

double choose_omega_max(const DegreeVector& zv, const DirectionSet& m,
                        double tail_budget) {
  zv.check(&m);
  const int d = m.dim();
  const double alpha = zv.min_re();
  for (int doubling = 0; doubling < 12; ++doubling) {
    const double w = 8.0 * kPi * static_cast<double>(1 << doubling);
    FrequencyGrid probe;
    probe.omega_max.assign(d, w);
    probe.bins.assign(d, 64);
    probe.min_degree_re = alpha;
    SampledField freq;
    freq.extents = probe.bins;
    freq.origin.assign(d, -w);
    freq.spacing.assign(d, 2.0 * w / 64.0);
    freq.values.resize(freq.size());
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> omega(d);
    double total = 0.0;
    for (std::size_t flat = 0; flat < freq.values.size(); ++flat) {
      for (int a = 0; a < d; ++a) {
        omega[a] = freq.origin[a] + freq.spacing[a] * static_cast<double>(idx[a]);
      }
      freq.values[flat] = boxspline_symbol(zv, m, omega);
      total += std::norm(freq.values[flat]);
      int axis = d - 1;
      while (axis >= 0 && ++idx[axis] == freq.extents[axis]) {
        idx[axis] = 0;
        --axis;
      }
    }
    const double tail = tail_energy_estimate(freq, alpha, probe);
    if (tail <= tail_budget * total) return w;
  }
  throw TailBudgetError("choose_omega_max: budget unreachable within cap");
}

DecayReport estimate_decay(const DegreeVector& zv, const DirectionSet& m,
                           int ray_count, double omega_min,
                           double omega_max) {
  zv.check(&m);
  if (!m.square()) {
    throw ScopeError("estimate_decay: diagonal M required");
  }
  const int d = m.dim();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      if (i != j && m.column(j)[i] != 0.0) {
        throw ScopeError("estimate_decay: diagonal M required");
      }
    }
  }
  if (ray_count < d) ray_count = d;
  if (!(omega_max > omega_min) || !(omega_min > 0.0)) {
    throw ValidationError("estimate_decay: need 0 < omega_min < omega_max");
  }

  std::vector<std::vector<double>> rays;
  for (int j = 0; j < d; ++j) {
    std::vector<double> e(d, 0.0);
    e[j] = 1.0;
    rays.push_back(std::move(e));
  }
  for (int extra = 0; static_cast<int>(rays.size()) < ray_count; ++extra) {
    std::vector<double> u(d, 0.0);
    u[extra % d] = 1.0;
    u[(extra + 1) % d] = 0.5 + 0.1 * static_cast<double>(extra / d);
    double norm = 0.0;
    for (double v : u) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : u) v /= norm;
    rays.push_back(std::move(u));
  }

  DecayReport report;
  report.alpha_theory = zv.min_re();
  report.alpha_est = std::numeric_limits<double>::infinity();

  constexpr int kShells = 24;
  constexpr int kSamplesPerShell = 96;
  const double log_lo = std::log(omega_min);
  const double log_hi = std::log(omega_max);
  const double shell_width = (log_hi - log_lo) / kShells;

  std::vector<double> omega(d);
  for (const auto& u : rays) {
    std::vector<double> xs, ys;
    for (int s = 0; s < kShells; ++s) {
      double best = 0.0;
      double best_logr = 0.0;
      for (int q = 0; q < kSamplesPerShell; ++q) {
        const double logr =
            log_lo + shell_width * (s + (q + 0.5) / kSamplesPerShell);
        const double r = std::exp(logr);
        for (int a = 0; a < d; ++a) omega[a] = r * u[a];
        const double mag = std::abs(boxspline_symbol(zv, m, omega));
        if (mag > best) {
          best = mag;
          best_logr = logr;
        }
      }
      if (best > 0.0) {
        xs.push_back(best_logr);
        ys.push_back(std::log(best));
      }
    }
    // Least-squares line through (log r, log max |Bhat|).
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ys[i] - my - slope * (xs[i] - mx);
      rss += r * r;
    }
    RayFit fit;
    fit.direction = u;
    fit.slope = slope;
    fit.residual = std::sqrt(rss / static_cast<double>(n));
    report.rays.push_back(std::move(fit));
    report.alpha_est = std::min(report.alpha_est, -slope - 1.0);
  }
  return report;
}

SmoothnessReport smoothness_exponents(const DegreeVector& zv,
                                      const DirectionSet& m) {
  zv.check(&m);
  if (!m.square()) throw ScopeError("smoothness_exponents: diagonal M required");
  const int d = m.dim();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      if (i != j && m.column(j)[i] != 0.0) {
        throw ScopeError("smoothness_exponents: diagonal M required");
      }
    }
  }
  SmoothnessReport report;
  const double alpha = zv.min_re();
  report.sobolev_sup = alpha + 0.5;
  const double excess = report.sobolev_sup - 0.5 * static_cast<double>(d);
  if (excess >= 0.0) {
    report.has_holder = true;
    report.holder_l = static_cast<int>(std::floor(excess));
    report.holder_gamma = excess - std::floor(excess);
  } else {
    report.has_holder = false;
    report.holder_l = 0;
    report.holder_gamma = 0.0;
  }
  return report;
}

}  // namespace cxbox
