#include "cxbox/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cxbox {
namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey). Good for ~13
// significant digits over the right half-plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

// log(sin(pi z)) computed so that exp() of it is exact; stable for large
// |Im z| where sin(pi z) itself overflows.
Complex log_sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  // Reduce the real part; sin(pi(z - n)) = (-1)^n sin(pi z).
  const double n = std::floor(x);
  const Complex zr(x - n, y);
  const Complex log_parity(0.0, std::fmod(n, 2.0) != 0.0 ? kPi : 0.0);
  if (std::abs(y) < 10.0) {
    return std::log(std::sin(kPi * zr)) + log_parity;
  }
  // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); keep the dominant factor
  // in the exponent.
  const Complex ipz = Complex(0.0, kPi) * zr;
  if (y > 0.0) {
    return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / Complex(0.0, 2.0)) +
           log_parity;
  }
  return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / Complex(0.0, 2.0)) +
         log_parity;
}

// Lanczos sum for Re(z) >= 0.5.
Complex log_gamma_right(Complex z) {
  Complex sum(kLanczosCoeff[0], 0.0);
  for (int k = 1; k < 15; ++k) {
    sum += kLanczosCoeff[k] / (z - 1.0 + static_cast<double>(k));
  }
  const Complex base = z - 0.5 + kLanczosG;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(base) - base +
         std::log(sum);
}

}  // namespace

Complex principal_log(Complex w) {
  double a = std::arg(w);
  if (a == kPi) a = -kPi;
  return Complex(std::log(std::abs(w)), a);
}

Complex principal_pow(Complex w, Complex a) {
  if (w == Complex(0.0, 0.0)) return {0.0, 0.0};
  return std::exp(a * principal_log(w));
}

Complex log_gamma(Complex z) {
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < 1e-13) {
    throw PoleError("log_gamma: pole at non-positive integer");
  }
  if (z.imag() == 0.0 && (z.real() == 1.0 || z.real() == 2.0)) {
    return {0.0, 0.0};  // Gamma(1) = Gamma(2) = 1, exactly
  }
  if (z.real() >= 0.5) {
    return log_gamma_right(z);
  }
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex complex_binomial(Complex a, int k) {
  Complex result(1.0, 0.0);
  for (int j = 0; j < k; ++j) {
    result *= (a - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return result;
}

int binomial_tail_index(Complex z, double eps) {
  if (z.real() <= -1.0) {
    throw DivergentSeriesError("binomial_tail_index: Re(z) <= -1");
  }
  const Complex a = z + 1.0;
  const double decay = z.real() + 1.0;  // terms ~ k^{-(decay+1)}
  // Exact finite case: integer a >= 0 makes the terms vanish beyond k = a.
  if (z.imag() == 0.0 && z.real() == std::round(z.real())) {
    return static_cast<int>(std::lround(z.real())) + 1;
  }
  constexpr int kMaxIndex = 200'000'000;
  // Fail fast when the asymptotic tail C k^{-decay} cannot reach eps within
  // the index cap: |b_k| ~ |Gamma(z+2) sin(pi(z+1))| / pi * k^{-(decay+1)}.
  {
    const double c = std::abs(std::exp(log_gamma(a + 1.0))) *
                     std::abs(std::sin(kPi * a)) / kPi;
    if (c > 0.0) {
      const double log_predicted =
          (std::log(2.0 * c / (decay * eps))) / decay;
      if (log_predicted > std::log(5.0 * kMaxIndex)) {
        throw Error(
            "binomial_tail_index: truncation index beyond practical reach "
            "(Re(z) too close to -1 for this eps)");
      }
    }
  }

  // Walk |binom(a, k)| by the ratio recurrence; once in the monotone
  // regime, bound the tail by the integral comparison
  //   sum_{j>K} |b_j| <= |b_{K+1}| (K+1) / decay * safety.
  double term = 1.0;  // |binom(a, 0)|
  const int k_min = static_cast<int>(std::ceil(std::abs(z) + 2.0));
  const double ar = a.real();
  const double ai2 = a.imag() * a.imag();
  for (int k = 0; k < kMaxIndex; ++k) {
    const double dr = ar - static_cast<double>(k);
    const double next = term * std::sqrt(dr * dr + ai2) / static_cast<double>(k + 1);
    if (next == 0.0) return k + 1;
    if (k + 1 >= k_min) {
      const double tail_bound = 2.0 * next * (k + 2) / decay;
      if (tail_bound < eps) return k + 1;
    }
    term = next;
  }
  throw DivergentSeriesError("binomial_tail_index: bound not reached");
}

}  // namespace cxbox
