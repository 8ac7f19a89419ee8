#include "cxbox/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

namespace cxbox {
namespace {

// Signed binomial-series coefficients b(t) = binom(z+1, t) for one axis.
struct AxisSeries {
  std::vector<Complex> coeff;   // stored prefix t = 0..stored_limit
  std::vector<double> suffix_max;  // suffix max of |coeff| over the prefix
  double abs_sum = 0.0;         // sum of |b(t)| over the full range
  double abs_max = 0.0;
  int truncation = 0;           // full per-axis range K_j
};

AxisSeries walk_axis(Complex z, int k_max, double store_floor) {
  AxisSeries axis;
  axis.truncation = k_max;
  const Complex a = z + 1.0;
  Complex b(1.0, 0.0);
  bool storing = true;
  for (int t = 0; t <= k_max; ++t) {
    const double mag = std::sqrt(std::norm(b));
    axis.abs_sum += mag;
    axis.abs_max = std::max(axis.abs_max, mag);
    if (storing) {
      axis.coeff.push_back(b);
      // Stop storing once the magnitudes are monotone decreasing and have
      // fallen below the floor; nothing beyond can enter a stored bucket.
      const bool decreasing =
          std::abs(a - static_cast<double>(t)) < static_cast<double>(t + 1);
      if (decreasing && mag < store_floor) storing = false;
    }
    b *= (a - static_cast<double>(t)) / static_cast<double>(t + 1);
    if (b == Complex(0.0, 0.0)) {
      axis.truncation = t;
      break;
    }
  }
  axis.suffix_max.assign(axis.coeff.size(), 0.0);
  double running = 0.0;
  for (int t = static_cast<int>(axis.coeff.size()) - 1; t >= 0; --t) {
    running = std::max(running, std::abs(axis.coeff[t]));
    axis.suffix_max[t] = running;
  }
  return axis;
}

std::vector<int> bucket_key(const DirectionSet& m,
                            std::span<const int> t_index) {
  std::vector<int> k(m.dim(), 0);
  for (int j = 0; j < m.count(); ++j) {
    for (int i = 0; i < m.dim(); ++i) {
      k[i] += t_index[j] * static_cast<int>(std::lround(m.column(j)[i]));
    }
  }
  return k;
}

}  // namespace

DirectionSet MaskCoefficients::direction_set() const {
  return DirectionSet::validate(directions);
}

MaskCoefficients compute_mask(const DegreeVector& zv, const DirectionSet& m,
                              double eps) {
  zv.check(&m);
  if (!m.integer_columns()) {
    throw ValidationError("compute_mask: direction set must have integer columns");
  }
  if (!(eps > 0.0) || eps >= 1.0) {
    throw ValidationError("compute_mask: eps must lie in (0, 1)");
  }
  const int n1 = zv.size();
  const int d = m.dim();

  MaskCoefficients mask;
  mask.eps = eps;
  mask.degrees = zv;
  mask.directions = m.columns();

  std::vector<AxisSeries> axes;
  axes.reserve(n1);
  std::vector<int> k_max(n1);
  for (int j = 0; j < n1; ++j) {
    k_max[j] = binomial_tail_index(zv.z[j], eps / static_cast<double>(n1));
  }
  // First pass fixes the per-axis magnitudes so the storage floor (relative
  // to the joint maximum) is known; |b_j(0)| = 1 keeps the floors finite.
  {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> abs_max(n1, 1.0);
    for (int j = 0; j < n1; ++j) {
      abs_max[j] = walk_axis(zv.z[j], k_max[j], kInf).abs_max;
    }
    double joint_max = 1.0;
    for (int j = 0; j < n1; ++j) joint_max *= abs_max[j];
    for (int j = 0; j < n1; ++j) {
      double others = 1.0;
      for (int i = 0; i < n1; ++i) {
        if (i != j) others *= abs_max[i];
      }
      // Non-square sets need every coefficient: colliding buckets can sum
      // small terms above the threshold.
      const double floor_j = m.square() ? eps * joint_max / others : 0.0;
      axes.push_back(walk_axis(zv.z[j], k_max[j], floor_j));
    }
  }
  mask.per_axis_truncation = k_max;

  double joint_abs_max = 1.0;
  double joint_abs_sum = 1.0;
  for (const AxisSeries& axis : axes) {
    joint_abs_max *= axis.abs_max;
    joint_abs_sum *= axis.abs_sum;
  }
  const double threshold = eps * joint_abs_max;

  // Recursive enumeration over the stored prefixes; the suffix-max bound
  // prunes whole subtrees that cannot reach the storage threshold.
  std::map<std::vector<int>, Complex> buckets;
  std::vector<int> t_index(n1, 0);
  double enumerated_abs = 0.0;

  auto descend = [&](auto&& self, int axis_j, Complex partial,
                     double partial_mag) -> void {
    const AxisSeries& axis = axes[axis_j];
    double rest_max = 1.0;
    for (int i = axis_j + 1; i < n1; ++i) rest_max *= axes[i].abs_max;
    for (int t = 0; t < static_cast<int>(axis.coeff.size()); ++t) {
      if (partial_mag * axis.suffix_max[t] * rest_max < threshold) break;
      const Complex value = partial * axis.coeff[t];
      const double mag = partial_mag * std::abs(axis.coeff[t]);
      t_index[axis_j] = t;
      if (axis_j + 1 == n1) {
        if (mag >= threshold) {
          buckets[bucket_key(m, t_index)] += value;
          enumerated_abs += mag;
        }
      } else if (mag * rest_max >= threshold) {
        self(self, axis_j + 1, value, mag);
      }
    }
    t_index[axis_j] = 0;
  };

  if (m.square()) {
    // Distinct t always land in distinct buckets (M injective), so the
    // threshold prune is exact.
    descend(descend, 0, Complex(1.0, 0.0), 1.0);
    mask.dropped_mass = joint_abs_sum - enumerated_abs;
  } else {
    // Buckets collide; enumerate the full truncated lattice, then prune.
    double cells = 1.0;
    for (int j = 0; j < n1; ++j) cells *= static_cast<double>(k_max[j]) + 1.0;
    if (cells > static_cast<double>(1 << 26)) {
      throw Error(
          "compute_mask: truncated lattice too large for a non-square "
          "direction set; relax eps or reduce the degrees");
    }
    std::fill(t_index.begin(), t_index.end(), 0);
    for (;;) {
      Complex value(1.0, 0.0);
      for (int j = 0; j < n1; ++j) value *= axes[j].coeff[t_index[j]];
      buckets[bucket_key(m, t_index)] += value;
      int j = n1 - 1;
      while (j >= 0 && ++t_index[j] > k_max[j]) {
        t_index[j] = 0;
        --j;
      }
      if (j < 0) break;
    }
    double pruned = 0.0;
    double bucket_max = 0.0;
    for (const auto& [k, v] : buckets) bucket_max = std::max(bucket_max, std::abs(v));
    const double bucket_threshold = eps * bucket_max;
    for (auto it = buckets.begin(); it != buckets.end();) {
      if (std::abs(it->second) < bucket_threshold) {
        pruned += std::abs(it->second);
        it = buckets.erase(it);
      } else {
        ++it;
      }
    }
    mask.dropped_mass = pruned;
  }

  if (buckets.empty()) {
    throw Error("compute_mask: no coefficients above the storage threshold");
  }

  // Enforce H(0) = 2^d on the stored coefficients.
  Complex stored_sum(0.0, 0.0);
  for (const auto& [k, v] : buckets) stored_sum += v;
  const double two_d = std::pow(2.0, d);
  const Complex enforced = two_d / stored_sum;

  Complex exponent(static_cast<double>(n1 - d), 0.0);
  for (const Complex& z : zv.z) exponent += z;
  const Complex paper = std::exp(-exponent * std::log(2.0));

  mask.normalization_enforced = enforced;
  mask.normalization_paper = paper;
  mask.dropped_mass *= std::abs(enforced);
  for (auto& [k, v] : buckets) v *= enforced;
  mask.entries = std::move(buckets);
  return mask;
}

Complex mask_symbol(const MaskCoefficients& mask,
                    std::span<const double> omega) {
  Complex sum(0.0, 0.0);
  for (const auto& [k, h] : mask.entries) {
    double phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) phase += k[i] * omega[i];
    sum += h * Complex(std::cos(phase), -std::sin(phase));
  }
  return sum;
}

double verify_two_scale(const MaskCoefficients& mask,
                        std::span<const std::vector<double>> omega_samples) {
  const DirectionSet m = mask.direction_set();
  const DegreeVector& zv = mask.degrees;
  const double two_d = std::pow(2.0, m.dim());
  double worst = 0.0;
  std::vector<double> doubled(m.dim());
  for (const auto& omega : omega_samples) {
    for (int i = 0; i < m.dim(); ++i) doubled[i] = 2.0 * omega[i];
    const Complex lhs = two_d * boxspline_symbol(zv, m, doubled);
    const Complex rhs = mask_symbol(mask, omega) * boxspline_symbol(zv, m, omega);
    const double denom = std::abs(lhs) + 1e-300;
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

std::vector<std::vector<double>> twoscale_omega_samples(const DirectionSet& m,
                                                        int count,
                                                        std::uint64_t seed) {
  // Keep every w.m_j inside [-1.5, 1.5]: both Bhat(w) and Bhat(2w) stay
  // well away from their zero sets (2 pi Z and pi Z), so the normalized
  // residual is well-conditioned.
  constexpr double kLimit = 1.5;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-kLimit, kLimit);
  std::vector<std::vector<double>> samples;
  samples.reserve(count);
  while (static_cast<int>(samples.size()) < count) {
    std::vector<double> omega(m.dim());
    for (double& w : omega) w = uniform(rng);
    bool ok = true;
    for (int j = 0; j < m.count() && ok; ++j) {
      if (std::abs(m.dot(j, omega)) > kLimit) ok = false;
    }
    if (ok) samples.push_back(std::move(omega));
  }
  return samples;
}

std::string mask_to_json(const MaskCoefficients& mask) {
  nlohmann::json root;
  nlohmann::json degrees = nlohmann::json::array();
  for (const Complex& z : mask.degrees.z) {
    degrees.push_back({z.real(), z.imag()});
  }
  root["degrees"] = std::move(degrees);
  root["directions"] = {{"d", mask.directions.empty()
                                  ? 0
                                  : static_cast<int>(mask.directions[0].size())},
                        {"columns", mask.directions}};
  root["eps"] = mask.eps;
  root["per_axis_truncation"] = mask.per_axis_truncation;
  root["normalization_enforced"] = {mask.normalization_enforced.real(),
                                    mask.normalization_enforced.imag()};
  root["normalization_paper"] = {mask.normalization_paper.real(),
                                 mask.normalization_paper.imag()};
  root["dropped_mass"] = mask.dropped_mass;
  nlohmann::json entries = nlohmann::json::array();
  // std::map keys are already in lexicographic order.
  for (const auto& [k, h] : mask.entries) {
    entries.push_back({{"k", k}, {"re", h.real()}, {"im", h.imag()}});
  }
  root["entries"] = std::move(entries);
  return root.dump(2);
}

MaskCoefficients mask_from_json(const std::string& text) {
  const nlohmann::json root = nlohmann::json::parse(text);
  MaskCoefficients mask;
  for (const auto& pair : root.at("degrees")) {
    mask.degrees.z.emplace_back(pair.at(0).get<double>(),
                                pair.at(1).get<double>());
  }
  mask.directions =
      root.at("directions").at("columns").get<std::vector<std::vector<double>>>();
  mask.eps = root.at("eps").get<double>();
  if (root.contains("per_axis_truncation")) {
    mask.per_axis_truncation =
        root.at("per_axis_truncation").get<std::vector<int>>();
  }
  if (root.contains("normalization_enforced")) {
    const auto& ne = root.at("normalization_enforced");
    mask.normalization_enforced = {ne.at(0).get<double>(), ne.at(1).get<double>()};
  }
  if (root.contains("normalization_paper")) {
    const auto& np = root.at("normalization_paper");
    mask.normalization_paper = {np.at(0).get<double>(), np.at(1).get<double>()};
  }
  if (root.contains("dropped_mass")) {
    mask.dropped_mass = root.at("dropped_mass").get<double>();
  }
  for (const auto& entry : root.at("entries")) {
    mask.entries[entry.at("k").get<std::vector<int>>()] =
        Complex(entry.at("re").get<double>(), entry.at("im").get<double>());
  }
  return mask;
}

}  // namespace cxbox
