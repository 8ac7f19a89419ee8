#include "cxbox/univariate.hpp"

#include <cmath>
#include <numbers>

namespace cxbox {
namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

bool is_nonneg_integer(Complex z) {
  return z.imag() == 0.0 && z.real() >= 0.0 &&
         z.real() == std::round(z.real());
}

}  // namespace

Complex truncated_power(Complex z, double t) {
  if (t <= 0.0) return {0.0, 0.0};
  return std::exp(z * std::log(t));
}

Complex truncated_power_kernel(Complex z, double t) {
  if (t <= 0.0) return {0.0, 0.0};
  return std::exp(z * std::log(t) - log_gamma(z + 1.0));
}

Complex backward_difference(Complex z, const ScalarFn& f, double t,
                            bool f_causal, double eps) {
  if (z.real() <= -1.0) {
    throw DivergentSeriesError("backward_difference: Re(z) <= -1");
  }
  int last;
  if (f_causal) {
    if (t <= 0.0) return {0.0, 0.0};
    last = static_cast<int>(std::floor(t));
  } else {
    last = binomial_tail_index(z, eps);
  }
  Complex sum(0.0, 0.0);
  Complex coeff(1.0, 0.0);  // binom(z+1, k), updated by the Pochhammer ratio
  double sign = 1.0;
  const Complex a = z + 1.0;
  for (int k = 0; k <= last; ++k) {
    sum += sign * coeff * f(t - k);
    coeff *= (a - static_cast<double>(k)) / static_cast<double>(k + 1);
    sign = -sign;
  }
  return sum;
}

bool pointwise_evaluable(Complex z) {
  return z.real() > 0.0 || is_nonneg_integer(z);
}

Complex bspline_eval(Complex z, double t) {
  if (z.real() <= -1.0) {
    throw DivergentSeriesError("bspline_eval: Re(z) <= -1");
  }
  if (!pointwise_evaluable(z)) {
    throw UnsupportedEvaluationError(
        "bspline_eval: pointwise values undefined for Re(z) in (-1, 0]; "
        "sample through the Fourier symbol instead");
  }
  if (t <= 0.0) return {0.0, 0.0};
  const Complex inv_gamma = std::exp(-log_gamma(z + 1.0));
  const Complex a = z + 1.0;
  Complex sum(0.0, 0.0);
  Complex coeff(1.0, 0.0);
  double sign = 1.0;
  const int last = static_cast<int>(std::floor(t));
  for (int k = 0; k <= last; ++k) {
    const double s = t - k;
    if (s > 0.0) {
      sum += sign * coeff * std::exp(z * std::log(s));
    }
    coeff *= (a - static_cast<double>(k)) / static_cast<double>(k + 1);
    sign = -sign;
  }
  return sum * inv_gamma;
}

Complex bspline_recurrence_eval(Complex z, double t) {
  if (!(z.real() > 1.0 || (is_nonneg_integer(z) && z.real() >= 1.0))) {
    throw UnsupportedEvaluationError(
        "bspline_recurrence_eval: needs Re(z) > 1");
  }
  if (t <= 0.0) return {0.0, 0.0};
  return (t / z) * bspline_eval(z - 1.0, t) +
         ((z + 1.0 - t) / z) * bspline_eval(z - 1.0, t - 1.0);
}

Complex omega_symbol(double omega) {
  // (1 - e^{-iw})/(iw) = sinc(w/2) e^{-iw/2}
  const double cycles = omega / (2.0 * kPi);
  if (cycles != 0.0 && cycles == std::round(cycles)) {
    return {0.0, 0.0};  // lattice zero, exactly
  }
  const double h = 0.5 * omega;
  return sinc(h) * Complex(std::cos(h), -std::sin(h));
}

Complex bspline_fourier(Complex z, double omega) {
  if (omega == 0.0) return {1.0, 0.0};
  return principal_pow(omega_symbol(omega), z + 1.0);
}

SpectrumFactors spectrum_factors(Complex z, double omega) {
  const Complex w = omega == 0.0 ? Complex(1.0, 0.0) : omega_symbol(omega);
  if (w == Complex(0.0, 0.0)) {
    throw UndefinedFactorizationError(
        "spectrum_factors: Omega vanishes at this frequency");
  }
  const Complex logw = principal_log(w);
  SpectrumFactors out;
  out.base = std::exp(Complex(z.real() + 1.0, 0.0) * logw);
  out.modulation = std::exp(Complex(0.0, z.imag() * logw.real()));
  out.damping = std::exp(-z.imag() * logw.imag());
  return out;
}

Complex convolve_quadrature(const ScalarFn& f, const ScalarFn& g, double t,
                            double support_lo, double support_hi,
                            double abs_tol) {
  const auto knots = lattice_knots(support_lo, support_hi, t);
  auto integrand = [&](double s) { return f(s) * g(t - s); };
  return integrate(integrand, support_lo, support_hi, abs_tol, knots);
}

}  // namespace cxbox
