#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "cxbox/spectral.hpp"
#include "cxbox/univariate.hpp"
#include "oracles/classical_splines.hpp"

using cxbox::Complex;
using cxbox::DegreeVector;
using cxbox::DirectionSet;

namespace {
constexpr double kPi = std::numbers::pi;

cxbox::SymbolFn bspline_symbol_1d(Complex z) {
  return [z](std::span<const double> omega) {
    return cxbox::bspline_fourier(z, omega[0]);
  };
}
}  // namespace

TEST_CASE("sampled field serialization round trip") {
  cxbox::SampledField field;
  field.domain = cxbox::SampledField::Domain::frequency;
  field.origin = {-1.0, 0.5};
  field.spacing = {0.25, 0.5};
  field.extents = {4, 6};
  field.values.resize(24);
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    field.values[i] = Complex(0.1 * static_cast<double>(i), -1.0 / (1.0 + i));
  }
  std::stringstream buffer;
  field.save(buffer);
  const auto back = cxbox::SampledField::load(buffer);
  CHECK(back.domain == field.domain);
  CHECK(back.origin == field.origin);
  CHECK(back.spacing == field.spacing);
  CHECK(back.extents == field.extents);
  CHECK(back.values == field.values);

  std::stringstream csv;
  field.write_csv(csv);
  CHECK(csv.str().starts_with("# cxbox field csv v1\ni0,i1,re,im\n0,0,0,-1\n"));
}

TEST_CASE("indicator spline from its symbol") {
  cxbox::FrequencyGrid grid;
  grid.omega_max = {8192.0};
  grid.bins = {1 << 16};
  grid.min_degree_re = 0.0;
  const auto field = cxbox::sample_from_symbol(bspline_symbol_1d({0.0, 0.0}),
                                               grid, {1.0, 0.0}, 1e-3);
  REQUIRE(field.extents[0] == std::size_t{1} << 16);
  const double dx = field.spacing[0];
  double worst = 0.0;
  for (std::size_t i = 0; i < field.extents[0]; ++i) {
    const double x = dx * static_cast<double>(i);
    if (x > 20.0) break;
    // Interior only: stay 0.1 away from the jumps at 0 and 1.
    if (std::abs(x) < 0.1 || std::abs(x - 1.0) < 0.1) continue;
    const double want = (x < 1.0) ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(field.values[i] - Complex(want, 0.0)));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("hat spline from its symbol") {
  cxbox::FrequencyGrid grid;
  grid.omega_max = {1.6e6};
  grid.bins = {1 << 21};
  grid.min_degree_re = 1.0;
  const auto field = cxbox::sample_from_symbol(bspline_symbol_1d({1.0, 0.0}),
                                               grid, {1.0, 0.0}, 1e-6);
  const double dx = field.spacing[0];
  double worst = 0.0;
  for (std::size_t i = 0; i < field.extents[0]; i += 97) {
    const double x = dx * static_cast<double>(i);
    if (x > 4.0) break;
    worst = std::max(worst,
                     std::abs(field.values[i] -
                              Complex(cxbox_test::deboor_bspline(1, x), 0.0)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("pointwise evaluation matches inverse-DFT samples") {
  const Complex z(3.0, 1.0);
  cxbox::FrequencyGrid grid;
  grid.omega_max = {64.0 * kPi};
  grid.bins = {1 << 14};
  grid.min_degree_re = 3.0;
  const auto field =
      cxbox::sample_from_symbol(bspline_symbol_1d(z), grid, {1.0, 0.0});
  // t = 2 lands on the grid: spacing pi/omega_max = 1/64.
  const std::size_t idx = 2 * 64;
  CHECK(field.spacing[0] == doctest::Approx(1.0 / 64.0));
  CHECK(std::abs(field.values[idx] - cxbox::bspline_eval(z, 2.0)) <= 1e-4);
}

TEST_CASE("sampling refinement consistency") {
  // Doubling both the box and the bin count leaves the common samples
  // within the accuracy budget.
  cxbox::FrequencyGrid coarse;
  coarse.omega_max = {3200.0};
  coarse.bins = {1 << 13};
  coarse.min_degree_re = 2.0;
  cxbox::FrequencyGrid fine;
  fine.omega_max = {6400.0};
  fine.bins = {1 << 15};
  fine.min_degree_re = 2.0;
  const auto a = cxbox::sample_from_symbol(bspline_symbol_1d({2.0, 0.0}),
                                           coarse, {1.0, 0.0});
  const auto b = cxbox::sample_from_symbol(bspline_symbol_1d({2.0, 0.0}), fine,
                                           {1.0, 0.0});
  // fine spacing = coarse spacing / 2.
  double worst = 0.0;
  for (std::size_t i = 0; i < 4000; ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[2 * i]));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("parseval consistency on the grid") {
  const Complex z(1.0, 0.5);
  cxbox::FrequencyGrid grid;
  grid.omega_max = {4096.0};
  grid.bins = {1 << 15};
  grid.min_degree_re = 1.0;
  const auto field =
      cxbox::sample_from_symbol(bspline_symbol_1d(z), grid, {1.0, 0.0});
  double time_l2 = 0.0;
  for (const Complex& v : field.values) time_l2 += std::norm(v);
  time_l2 *= field.spacing[0];

  double freq_l2 = 0.0;
  const double dw = 2.0 * grid.omega_max[0] / static_cast<double>(grid.bins[0]);
  for (std::size_t k = 0; k < grid.bins[0]; ++k) {
    const double w = -grid.omega_max[0] + dw * static_cast<double>(k);
    freq_l2 += std::norm(cxbox::bspline_fourier(z, w));
  }
  freq_l2 *= dw / (2.0 * kPi);
  CHECK(std::abs(time_l2 - freq_l2) <= 0.01 * freq_l2);
}

TEST_CASE("tail budget rejections") {
  cxbox::FrequencyGrid grid;
  grid.omega_max = {64.0};
  grid.bins = {256};
  grid.min_degree_re = -0.46;  // 2 alpha + 1 barely positive
  CHECK_THROWS_AS((void)cxbox::sample_from_symbol(
                      bspline_symbol_1d({-0.46, 0.3}), grid, {1.0, 0.0}),
                  cxbox::TailBudgetError);

  // Slow sinc decay cannot meet a 1e-6 energy budget on a small box.
  grid.min_degree_re = 0.0;
  CHECK_THROWS_AS((void)cxbox::sample_from_symbol(bspline_symbol_1d({0.0, 0.0}),
                                                  grid, {1.0, 0.0}, 1e-6),
                  cxbox::TailBudgetError);
}

TEST_CASE("grid validation") {
  cxbox::FrequencyGrid grid;
  grid.omega_max = {16.0};
  grid.bins = {255};  // odd
  CHECK_THROWS_AS((void)cxbox::sample_from_symbol(bspline_symbol_1d({1.0, 0.0}),
                                                  grid, {1.0, 0.0}),
                  cxbox::ValidationError);
}

TEST_CASE("choose_omega_max honors the budget") {
  const DegreeVector zv{{2.0, 1.0}, {2.0, 0.0}};
  const auto m = DirectionSet::validate({{1, 0}, {0, 1}});
  const double w = cxbox::choose_omega_max(zv, m, 1e-6);
  CHECK(w >= 8.0 * kPi);
  CHECK(w <= 8.0 * kPi * 4096.0);
}

TEST_CASE("decay slope fits") {
  const auto id2 = DirectionSet::validate({{1, 0}, {0, 1}});
  const auto diag23 = DirectionSet::validate({{2, 0}, {0, 3}});

  const auto flat = cxbox::estimate_decay(DegreeVector{{0.0, 0.0}, {0.0, 0.0}},
                                          id2, 2, 1e2, 1e4);
  CHECK(flat.alpha_theory == 0.0);
  CHECK(std::abs(flat.alpha_est - 0.0) <= 0.15);

  const auto mixed = cxbox::estimate_decay(DegreeVector{{1.0, 0.0}, {3.0, 0.0}},
                                           id2, 4, 1e2, 1e4);
  CHECK(mixed.alpha_theory == 1.0);
  CHECK(std::abs(mixed.alpha_est - 1.0) <= 0.15);

  const auto cx = cxbox::estimate_decay(DegreeVector{{0.5, 1.0}, {2.0, 0.0}},
                                        diag23, 2, 1e2, 1e4);
  CHECK(cx.alpha_theory == 0.5);
  CHECK(std::abs(cx.alpha_est - 0.5) <= 0.15);

  const auto mesh = DirectionSet::validate({{1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS((void)cxbox::estimate_decay(
                      DegreeVector{{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}, mesh, 2,
                      1e2, 1e4),
                  cxbox::ScopeError);
  const auto shear = DirectionSet::validate({{1, 0}, {1, 1}});
  CHECK_THROWS_AS((void)cxbox::estimate_decay(DegreeVector{{1.0, 0.0}, {1.0, 0.0}},
                                              shear, 2, 1e2, 1e4),
                  cxbox::ScopeError);
}

TEST_CASE("smoothness exponents") {
  const auto id2 = DirectionSet::validate({{1, 0}, {0, 1}});
  const auto a =
      cxbox::smoothness_exponents(DegreeVector{{1.0, 0.0}, {1.0, 0.0}}, id2);
  CHECK(a.sobolev_sup == doctest::Approx(1.5));
  CHECK(a.has_holder);
  CHECK(a.holder_l == 0);
  CHECK(a.holder_gamma == doctest::Approx(0.5));

  const auto b =
      cxbox::smoothness_exponents(DegreeVector{{0.0, 0.0}, {0.0, 0.0}}, id2);
  CHECK(b.sobolev_sup == doctest::Approx(0.5));
  CHECK_FALSE(b.has_holder);

  const auto diag23 = DirectionSet::validate({{2, 0}, {0, 3}});
  const auto c = cxbox::smoothness_exponents(
      DegreeVector{{3.0, 1.0}, {2.0, 1.0}}, diag23);
  CHECK(c.sobolev_sup == doctest::Approx(2.5));
}
