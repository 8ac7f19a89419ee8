#pragma once

#include <optional>
#include <string>

#include "cxbox/directions.hpp"
#include "cxbox/multivariate.hpp"

namespace cxbox {

// Frequency-grid request attached to a problem: uniform omega_max and bin
// count per axis.
struct GridRequest {
  double omega_max = 0.0;
  std::size_t bins = 0;
};

// A problem statement as ingested by the CLI: degrees, directions, an
// optional sampling grid, and the default tolerance knob.
struct ProblemSpec {
  DegreeVector degrees;
  DirectionSet directions = DirectionSet::validate({{1.0}});
  std::optional<GridRequest> grid;
  double eps = 1e-8;

  static ProblemSpec from_json_string(const std::string& text);
  static ProblemSpec from_file(const std::string& path);
};

}  // namespace cxbox
