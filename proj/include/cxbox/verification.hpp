#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cxbox/refinement.hpp"

namespace cxbox {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool skipped = false;
  bool pass = true;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_json(std::uint64_t seed) const;
};

// Named residual suites behind `cxbox verify`. Deterministic for a fixed
// seed; tolerances follow the per-module contracts (integer degrees get the
// exact-case tolerances) and are echoed in the report.
VerificationReport verify_convolution(const DegreeVector& zv,
                                      const DirectionSet& m,
                                      std::uint64_t seed);
VerificationReport verify_partition_of_unity(const DegreeVector& zv,
                                             const DirectionSet& m,
                                             std::uint64_t seed);
VerificationReport verify_twoscale(const DegreeVector& zv,
                                   const DirectionSet& m, double eps,
                                   std::uint64_t seed,
                                   const MaskCoefficients* precomputed = nullptr);
VerificationReport verify_derivative(const DegreeVector& zv,
                                     const DirectionSet& m,
                                     std::uint64_t seed);
VerificationReport verify_fractional(const DegreeVector& zv,
                                     const DirectionSet& m, double eps,
                                     std::uint64_t seed);

}  // namespace cxbox
