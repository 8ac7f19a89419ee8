// Independent classical-spline oracles for the integer-degree reductions.
// Deliberately separate from the library: de Boor's recurrence on doubles,
// no shared code paths with the implementation under test.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace cxbox_test {

// Cardinal B-spline of integer degree n (order n+1) with knots 0..n+1,
// by the de Boor recurrence.
inline double deboor_bspline(int degree, double t) {
  if (degree == 0) {
    return (t >= 0.0 && t < 1.0) ? 1.0 : 0.0;
  }
  const double n = static_cast<double>(degree);
  return (t / n) * deboor_bspline(degree - 1, t) +
         ((n + 1.0 - t) / n) * deboor_bspline(degree - 1, t - 1.0);
}

// Tensor-product oracle for a square direction matrix given as columns:
// B(x) = prod_j deboor(z_j, (M^{-1}x)_j) / |det M|; the inverse is supplied
// by the caller so nothing is shared with the library's linear algebra.
inline double tensor_box_oracle(const std::vector<int>& degrees,
                                const std::vector<std::vector<double>>& inv,
                                double det, const std::vector<double>& x) {
  const std::size_t d = inv.size();
  double prod = 1.0;
  for (std::size_t j = 0; j < d; ++j) {
    double tj = 0.0;
    for (std::size_t i = 0; i < d; ++i) tj += inv[j][i] * x[i];
    prod *= deboor_bspline(degrees[j], tj);
  }
  return prod / std::abs(det);
}

// Composite Gauss-Legendre (5-point) over [a, b] split at the supplied
// breakpoints; exact for the piecewise-polynomial integrands below.
inline double piecewise_gauss(const std::function<double(double)>& f, double a,
                              double b, std::vector<double> breaks) {
  static const double node[5] = {-0.906179845938664, -0.538469310105683, 0.0,
                                 0.538469310105683, 0.906179845938664};
  static const double weight[5] = {0.236926885056189, 0.478628670499366,
                                   0.568888888888889, 0.478628670499366,
                                   0.236926885056189};
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = std::max(a, breaks[i]);
    const double hi = std::min(b, breaks[i + 1]);
    if (hi <= lo) continue;
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    // Subdivide each piece to keep the polynomial degree within reach.
    for (int s = 0; s < 4; ++s) {
      const double c2 = lo + (hi - lo) * (s + 0.5) / 4.0;
      const double h2 = h / 4.0;
      for (int q = 0; q < 5; ++q) {
        total += weight[q] * h2 * f(c2 + h2 * node[q]);
      }
    }
  }
  return total;
}

// Three-direction box spline oracle on M = [e1, e2, e1+e2] with integer
// degrees (z0, z1, z2): the convolution integral
//   B(x) = int deboor(z2, u) * deboor(z0, x0-u) * deboor(z1, x1-u) du,
// integrated exactly over the piecewise-polynomial breakpoints.
inline double three_direction_oracle(int z0, int z1, int z2,
                                     const std::vector<double>& x) {
  const double hi = static_cast<double>(z2) + 1.0;
  std::vector<double> breaks;
  for (int k = 0; k <= z2 + 1; ++k) breaks.push_back(k);
  for (int k = 0; k <= z0 + 1; ++k) breaks.push_back(x[0] - k);
  for (int k = 0; k <= z1 + 1; ++k) breaks.push_back(x[1] - k);
  auto f = [&](double u) {
    return deboor_bspline(z2, u) * deboor_bspline(z0, x[0] - u) *
           deboor_bspline(z1, x[1] - u);
  };
  return piecewise_gauss(f, 0.0, hi, std::move(breaks));
}

// Courant element on the three-direction mesh (all degrees 0): closed form
// length of {t in [0,1): x - t(1,1) in [0,1)^2}.
inline double courant_oracle(const std::vector<double>& x) {
  const double lo = std::max({x[0] - 1.0, x[1] - 1.0, 0.0});
  const double hi = std::min({x[0], x[1], 1.0});
  return std::max(0.0, hi - lo);
}

}  // namespace cxbox_test
