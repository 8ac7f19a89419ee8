#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cxbox {

// Uniform d-dimensional grid of complex samples, row-major with the last
// axis contiguous. Carries either time- or frequency-domain data.
struct SampledField {
  enum class Domain { time, frequency };

  Domain domain = Domain::time;
  std::vector<double> origin;
  std::vector<double> spacing;
  std::vector<std::size_t> extents;
  std::vector<std::complex<double>> values;

  int dim() const { return static_cast<int>(extents.size()); }
  std::size_t size() const;
  // Row-major flat index of a multi-index.
  std::size_t index(std::span<const std::size_t> idx) const;
  // Physical coordinate of a multi-index.
  std::vector<double> coordinate(std::span<const std::size_t> idx) const;

  // Checks the metadata/value-count invariants; throws ValidationError.
  void check() const;

  // Binary layout: one JSON header line (domain, origin, spacing, extents)
  // followed by little-endian f64 pairs (re, im) in row-major order.
  void save(std::ostream& out) const;
  static SampledField load(std::istream& in);
  void save_file(const std::string& path) const;
  static SampledField load_file(const std::string& path);

  // CSV rows: index tuple, re, im.
  void write_csv(std::ostream& out) const;
};

}  // namespace cxbox
