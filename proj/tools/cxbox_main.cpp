// cxbox: evaluate, sample, and verify box splines of complex degree.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cxbox/format.hpp"
#include "cxbox/fractional.hpp"
#include "cxbox/problem_spec.hpp"
#include "cxbox/refinement.hpp"
#include "cxbox/spectral.hpp"
#include "cxbox/univariate.hpp"
#include "cxbox/verification.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitSpecInvalid = 2;
constexpr int kExitUnsupported = 3;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw cxbox::Error("cannot open output file: " + path);
  return file;
}

std::vector<std::vector<double>> read_points(const std::string& path, int d) {
  std::ifstream in(path);
  if (!in) throw cxbox::ValidationError("cannot open points file: " + path);
  std::vector<std::vector<double>> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> x;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) x.push_back(std::stod(cell));
    if (static_cast<int>(x.size()) != d) {
      throw cxbox::ValidationError("points file: expected " +
                                   std::to_string(d) + " coordinates per row");
    }
    points.push_back(std::move(x));
  }
  return points;
}

void write_value_rows(std::ostream& out,
                      const std::vector<std::vector<double>>& points,
                      const std::vector<cxbox::Complex>& values, int d) {
  out << "# cxbox eval csv v1\n";
  for (int a = 0; a < d; ++a) out << 'x' << a << ',';
  out << "re,im\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int a = 0; a < d; ++a) out << cxbox::format_double(points[i][a]) << ',';
    out << cxbox::format_double(values[i].real()) << ','
        << cxbox::format_double(values[i].imag()) << '\n';
  }
}

int run_eval(const cxbox::ProblemSpec& spec, const std::string& points_path,
             const std::string& fn, const std::string& out_path) {
  const int d = spec.directions.dim();
  const auto points = read_points(points_path, d);
  std::vector<cxbox::Complex> values;
  values.reserve(points.size());
  for (const auto& x : points) {
    if (fn == "kernel") {
      values.push_back(
          cxbox::truncated_power_eval_invertible(spec.degrees, spec.directions, x));
    } else {
      values.push_back(
          cxbox::boxspline_eval_invertible(spec.degrees, spec.directions, x));
    }
  }
  std::ofstream file;
  write_value_rows(open_output(file, out_path), points, values, d);
  return 0;
}

int run_sample(const cxbox::ProblemSpec& spec, const std::string& out_path,
               double tail_budget) {
  const int d = spec.directions.dim();
  cxbox::FrequencyGrid grid;
  if (spec.grid) {
    grid.omega_max.assign(d, spec.grid->omega_max);
    grid.bins.assign(d, spec.grid->bins);
  } else {
    grid.omega_max.assign(
        d, cxbox::choose_omega_max(spec.degrees, spec.directions, tail_budget));
    grid.bins.assign(d, 512);
  }
  grid.min_degree_re = spec.degrees.min_re();
  auto symbol = [&](std::span<const double> omega) {
    return cxbox::boxspline_symbol(spec.degrees, spec.directions, omega);
  };
  const cxbox::SampledField field =
      cxbox::sample_from_symbol(symbol, grid, cxbox::Complex(1.0, 0.0),
                                tail_budget);
  field.save_file(out_path.empty() ? "field.bin" : out_path);
  return 0;
}

int run_spectrum(const cxbox::ProblemSpec& spec, const std::string& out_path) {
  const int d = spec.directions.dim();
  const double omega_max =
      spec.grid ? spec.grid->omega_max : 4.0 * std::numbers::pi;
  const std::size_t bins = spec.grid ? spec.grid->bins : 128;

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "# cxbox spectrum csv v1\n";
  for (int a = 0; a < d; ++a) out << 'w' << a << ',';
  out << "re,im\n";
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> omega(d);
  const double step = 2.0 * omega_max / static_cast<double>(bins);
  for (;;) {
    for (int a = 0; a < d; ++a) {
      omega[a] = -omega_max + step * static_cast<double>(idx[a]);
    }
    const cxbox::Complex v =
        cxbox::boxspline_symbol(spec.degrees, spec.directions, omega);
    for (int a = 0; a < d; ++a) out << cxbox::format_double(omega[a]) << ',';
    out << cxbox::format_double(v.real()) << ','
        << cxbox::format_double(v.imag()) << '\n';
    int axis = d - 1;
    while (axis >= 0 && ++idx[axis] == bins) {
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return 0;
}

int run_mask(const cxbox::ProblemSpec& spec, double eps,
             const std::string& out_path) {
  const cxbox::MaskCoefficients mask =
      cxbox::compute_mask(spec.degrees, spec.directions, eps);
  std::ofstream file;
  open_output(file, out_path) << cxbox::mask_to_json(mask) << '\n';
  return 0;
}

int run_verify(const cxbox::ProblemSpec& spec, const std::string& suite,
               double eps, double tol_override, std::uint64_t seed,
               const std::string& mask_path, const std::string& out_path) {
  cxbox::VerificationReport report;
  auto append = [&report](const cxbox::VerificationReport& part) {
    report.checks.insert(report.checks.end(), part.checks.begin(),
                         part.checks.end());
  };

  std::optional<cxbox::MaskCoefficients> loaded;
  if (!mask_path.empty()) {
    std::ifstream in(mask_path);
    if (!in) throw cxbox::ValidationError("cannot open mask file: " + mask_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    loaded = cxbox::mask_from_json(buffer.str());
  }

  if (suite == "convolution" || suite == "all") {
    append(cxbox::verify_convolution(spec.degrees, spec.directions, seed));
  }
  if (suite == "pou" || suite == "all") {
    append(cxbox::verify_partition_of_unity(spec.degrees, spec.directions, seed));
  }
  if (suite == "twoscale" || suite == "all") {
    append(cxbox::verify_twoscale(spec.degrees, spec.directions, eps, seed,
                                  loaded ? &*loaded : nullptr));
  }
  if (suite == "derivative" || suite == "all") {
    append(cxbox::verify_derivative(spec.degrees, spec.directions, seed));
  }
  if (suite == "fractional" || suite == "all") {
    append(cxbox::verify_fractional(spec.degrees, spec.directions, eps, seed));
  }
  if (report.checks.empty()) {
    throw cxbox::ValidationError("verify: unknown suite " + suite);
  }
  if (tol_override > 0.0) {
    for (cxbox::CheckResult& check : report.checks) {
      if (check.skipped) continue;
      check.tolerance = tol_override;
      check.pass = check.residual <= tol_override;
    }
  }

  std::ofstream file;
  open_output(file, out_path) << report.to_json(seed) << '\n';
  return report.all_pass() ? 0 : kExitVerifyFailed;
}

int run_decay(const cxbox::ProblemSpec& spec, const std::string& out_path) {
  const cxbox::DecayReport report =
      cxbox::estimate_decay(spec.degrees, spec.directions,
                            spec.directions.dim() + 2, 1e2, 1e4);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "{\n  \"alpha_est\": " << cxbox::format_double(report.alpha_est)
      << ",\n  \"alpha_theory\": " << cxbox::format_double(report.alpha_theory)
      << ",\n  \"rays\": [\n";
  for (std::size_t i = 0; i < report.rays.size(); ++i) {
    const auto& ray = report.rays[i];
    out << "    {\"direction\": [";
    for (std::size_t a = 0; a < ray.direction.size(); ++a) {
      if (a) out << ", ";
      out << cxbox::format_double(ray.direction[a]);
    }
    out << "], \"slope\": " << cxbox::format_double(ray.slope)
        << ", \"residual\": " << cxbox::format_double(ray.residual) << "}"
        << (i + 1 < report.rays.size() ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"box splines of complex degree: evaluation, sampling, masks, "
               "and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string spec_path, out_path, points_path, mask_path;
  std::string fn = "spline";
  std::string suite = "all";
  double eps = -1.0;
  double tol = -1.0;
  std::uint64_t seed = 20240901ULL;

  app.add_option("--spec", spec_path, "problem spec JSON")->required();
  app.add_option("--out", out_path, "output path (default: stdout/field.bin)");
  app.add_option("--eps", eps, "truncation / tail-budget override");
  app.add_option("--tol", tol, "override the pass tolerance of verify checks");
  app.add_option("--seed", seed, "RNG seed for sampled checks");

  CLI::App* eval = app.add_subcommand("eval", "evaluate at points (CSV out)");
  eval->add_option("--points", points_path, "points file, one row per point")
      ->required();
  eval->add_option("--fn", fn, "spline | kernel");

  app.add_subcommand("sample", "inverse-DFT time samples (binary field out)");
  app.add_subcommand("spectrum", "Fourier symbol on a grid (CSV out)");
  app.add_subcommand("mask", "two-scale mask coefficients (JSON out)");
  CLI::App* verify = app.add_subcommand("verify", "run identity residual checks");
  verify->add_option("--suite", suite,
                     "convolution | pou | twoscale | derivative | fractional | all");
  verify->add_option("--mask", mask_path, "reuse a mask JSON for the twoscale suite");
  app.add_subcommand("decay", "fit the symbol decay law (JSON out)");

  CLI11_PARSE(app, argc, argv);

  try {
    const cxbox::ProblemSpec spec = cxbox::ProblemSpec::from_file(spec_path);
    const double eff_eps = eps > 0.0 ? eps : spec.eps;
    if (app.got_subcommand("eval")) {
      return run_eval(spec, points_path, fn, out_path);
    }
    if (app.got_subcommand("sample")) {
      return run_sample(spec, out_path, eps > 0.0 ? eps : 1e-6);
    }
    if (app.got_subcommand("spectrum")) {
      return run_spectrum(spec, out_path);
    }
    if (app.got_subcommand("mask")) {
      return run_mask(spec, eff_eps, out_path);
    }
    if (app.got_subcommand("verify")) {
      return run_verify(spec, suite, eff_eps, tol, seed, mask_path, out_path);
    }
    if (app.got_subcommand("decay")) {
      return run_decay(spec, out_path);
    }
  } catch (const cxbox::ValidationError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return kExitSpecInvalid;
  } catch (const cxbox::UnsupportedEvaluationError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const cxbox::NotSquareError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const cxbox::ScopeError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const cxbox::DivergentSeriesError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const cxbox::TailBudgetError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const cxbox::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
