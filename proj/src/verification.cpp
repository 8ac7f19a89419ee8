#include "cxbox/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "cxbox/fractional.hpp"
#include "cxbox/univariate.hpp"

namespace cxbox {
namespace {

CheckResult make_check(std::string name, double residual, double tolerance) {
  CheckResult c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

CheckResult make_skipped(std::string name, std::string_view reason) {
  CheckResult c;
  c.name = std::move(name);
  c.name += " [skipped: ";
  c.name += reason;
  c.name += "]";
  c.skipped = true;
  c.pass = true;
  return c;
}

std::vector<double> random_omega(std::mt19937_64& rng, int d, double lo,
                                 double hi) {
  std::uniform_real_distribution<double> uniform(lo, hi);
  std::vector<double> omega(d);
  for (double& w : omega) w = uniform(rng);
  return omega;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::to_json(std::uint64_t seed) const {
  nlohmann::json root;
  root["seed"] = seed;
  root["pass"] = all_pass();
  nlohmann::json list = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    list.push_back({{"name", c.name},
                    {"residual", c.residual},
                    {"tolerance", c.tolerance},
                    {"skipped", c.skipped},
                    {"pass", c.pass}});
  }
  root["checks"] = std::move(list);
  return root.dump(2);
}

VerificationReport verify_convolution(const DegreeVector& zv,
                                      const DirectionSet& m,
                                      std::uint64_t seed) {
  zv.check(&m);
  VerificationReport report;
  std::mt19937_64 rng(seed);
  const DegreeVector zsum = zv.convolved_with(zv);

  double worst_box = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto omega = random_omega(rng, m.dim(), -3.0, 3.0);
    const Complex lhs = boxspline_symbol(zv, m, omega) * boxspline_symbol(zv, m, omega);
    const Complex rhs = boxspline_symbol(zsum, m, omega);
    // Relative to the symbol magnitude: damping can push |Bhat| far above 1.
    worst_box =
        std::max(worst_box, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
  }
  report.checks.push_back(make_check("boxspline_symbol_semigroup", worst_box, 1e-12));

  double worst_tp = 0.0;
  int accepted = 0;
  while (accepted < 200) {
    const auto omega = random_omega(rng, m.dim(), -3.0, 3.0);
    bool ok = true;
    for (int j = 0; j < m.count(); ++j) {
      if (std::abs(m.dot(j, omega)) < 0.3) ok = false;
    }
    if (!ok) continue;
    ++accepted;
    const Complex lhs =
        truncated_power_symbol(zv, m, omega) * truncated_power_symbol(zv, m, omega);
    const Complex rhs = truncated_power_symbol(zsum, m, omega);
    worst_tp = std::max(worst_tp, std::abs(lhs - rhs) / (std::abs(rhs) + 1e-300));
  }
  report.checks.push_back(
      make_check("truncated_power_symbol_semigroup", worst_tp, 1e-12));

  if (m.dim() == 1 && m.count() == 1 && zv.z[0].real() > 0.0) {
    const Complex z = zv.z[0];
    double worst = 0.0;
    for (double t : {0.7, 1.3, 2.1}) {
      auto f = [&](double s) { return bspline_eval(z, s); };
      const Complex conv = convolve_quadrature(f, f, t, 0.0, t, 1e-9);
      const Complex direct = bspline_eval(2.0 * z + 1.0, t);
      worst = std::max(worst, std::abs(conv - direct));
    }
    report.checks.push_back(make_check("convolution_time_domain", worst, 1e-6));
  } else {
    report.checks.push_back(make_skipped("convolution_time_domain",
                                         "needs d = 1 and Re(z) > 0"));
  }
  return report;
}

VerificationReport verify_partition_of_unity(const DegreeVector& zv,
                                             const DirectionSet& m,
                                             std::uint64_t seed) {
  zv.check(&m);
  VerificationReport report;
  const bool evaluable =
      m.square() && std::all_of(zv.z.begin(), zv.z.end(), pointwise_evaluable);
  if (!evaluable) {
    report.checks.push_back(make_skipped(
        "partition_of_unity", "needs square M and pointwise-evaluable degrees"));
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double tol = zv.all_integer() ? 1e-10 : 1e-4;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> x(m.dim());
    for (double& v : x) v = uniform(rng);
    const PartitionSweep sweep = partition_of_unity_adaptive(zv, m, x);
    worst = std::max(worst, sweep.residual);
  }
  report.checks.push_back(make_check("partition_of_unity", worst, tol));
  return report;
}

VerificationReport verify_twoscale(const DegreeVector& zv,
                                   const DirectionSet& m, double eps,
                                   std::uint64_t seed,
                                   const MaskCoefficients* precomputed) {
  zv.check(&m);
  VerificationReport report;
  if (!m.integer_columns()) {
    report.checks.push_back(
        make_skipped("two_scale_residual", "needs integer direction columns"));
    return report;
  }
  MaskCoefficients computed;
  const MaskCoefficients* mask = precomputed;
  if (mask == nullptr) {
    computed = compute_mask(zv, m, eps);
    mask = &computed;
  }
  const auto samples = twoscale_omega_samples(m, 64, seed);
  const double residual = verify_two_scale(*mask, samples);
  const double tol = zv.all_integer() ? 1e-8 : 10.0 * eps;
  report.checks.push_back(make_check("two_scale_residual", residual, tol));

  Complex dc(0.0, 0.0);
  for (const auto& [k, h] : mask->entries) dc += h;
  const double two_d = std::pow(2.0, m.dim());
  report.checks.push_back(
      make_check("mask_dc_sum", std::abs(dc - two_d), 10.0 * eps));
  return report;
}

VerificationReport verify_derivative(const DegreeVector& zv,
                                     const DirectionSet& m,
                                     std::uint64_t seed) {
  zv.check(&m);
  VerificationReport report;
  std::mt19937_64 rng(seed);

  std::vector<int> usable;
  for (int j = 0; j < zv.size(); ++j) {
    if (zv.z[j].real() > 0.0) usable.push_back(j);
  }
  if (usable.empty()) {
    report.checks.push_back(
        make_skipped("derivative_symbol", "needs some Re(z_j) > 0"));
  } else {
    double worst = 0.0;
    std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const int j = usable[pick(rng)];
      const auto omega = random_omega(rng, m.dim(), -3.0, 3.0);
      const SymbolPair pair = derivative_symbol_check(zv, m, j, omega);
      worst = std::max(worst, std::abs(pair.lhs - pair.rhs) /
                                  (1.0 + std::abs(pair.lhs)));
    }
    report.checks.push_back(make_check("derivative_symbol", worst, 1e-10));
  }

  if (zv.min_re() > 0.0) {
    double worst = 0.0;
    int accepted = 0;
    const DegreeVector lowered = zv.lowered_all();
    while (accepted < 200) {
      const auto omega = random_omega(rng, m.dim(), -3.0, 3.0);
      bool ok = true;
      for (int j = 0; j < m.count(); ++j) {
        if (std::abs(m.dot(j, omega)) < 0.3) ok = false;
      }
      if (!ok) continue;
      ++accepted;
      Complex lhs = truncated_power_symbol(zv, m, omega);
      for (int j = 0; j < m.count(); ++j) {
        lhs *= Complex(0.0, m.dot(j, omega));
      }
      const Complex rhs = truncated_power_symbol(lowered, m, omega);
      worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(rhs) + 1e-300));
    }
    report.checks.push_back(make_check("mixed_derivative_ladder", worst, 1e-12));
  } else {
    report.checks.push_back(
        make_skipped("mixed_derivative_ladder", "needs Re(z_j) > 0 for all j"));
  }
  return report;
}

VerificationReport verify_fractional(const DegreeVector& zv,
                                     const DirectionSet& m, double eps,
                                     std::uint64_t seed) {
  zv.check(&m);
  VerificationReport report;

  int K = 0;
  for (const Complex& z : zv.z) {
    K = std::max(K, binomial_tail_index(z, eps / zv.size()));
  }
  K = std::min(K, 200000);
  const auto samples = spline_equation_samples(m, 100, seed);
  const double residual = verify_spline_equation(zv, m, samples, K);
  const double tol = zv.all_integer() ? 1e-10 : 1e-6;
  report.checks.push_back(make_check("spline_equation", residual, tol));

  const int d = zv.size();  // fractional operators act on R^{n+1}
  const LizorkinWindow window{1.0, 2.0};
  std::vector<double> omega_max(d, 16.0);
  std::vector<std::size_t> bins(d, 64);
  std::vector<double> center(d, 6.0);
  const SampledField field =
      windowed_gaussian_field(omega_max, bins, center, 1.5, window);

  const FractionalOrder order = FractionalOrder::from_degrees(zv);
  report.checks.push_back(make_check(
      "fractional_roundtrip", fractional_roundtrip_residual(order, field, window),
      1e-9));

  DegreeVector zb = zv;
  for (int j = 0; j < zb.size(); ++j) {
    zb.z[j] = 0.5 * zv.z[(j + 1) % zv.size()] + 0.3;
  }
  report.checks.push_back(make_check(
      "fractional_semigroup",
      fractional_semigroup_residual(zv, zb, field, window), 1e-9));
  return report;
}

}  // namespace cxbox
