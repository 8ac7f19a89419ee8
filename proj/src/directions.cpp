#include "cxbox/directions.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace cxbox {
namespace {

// Rank of a d x m matrix (columns given) by Gaussian elimination with
// partial pivoting; also returns det and inverse when square.
struct Decomposition {
  int rank = 0;
  double det = 0.0;
  std::vector<std::vector<double>> inverse;  // empty unless square, full rank
};

Decomposition decompose(const std::vector<std::vector<double>>& columns,
                        int d) {
  const int m = static_cast<int>(columns.size());
  // Row-major working copy, augmented with the identity when square.
  const bool square = (m == d);
  const int width = square ? 2 * d : m;
  std::vector<double> a(static_cast<std::size_t>(d) * width, 0.0);
  double scale = 0.0;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < d; ++i) {
      a[i * width + j] = columns[j][i];
      scale = std::max(scale, std::abs(columns[j][i]));
    }
  }
  if (square) {
    for (int i = 0; i < d; ++i) a[i * width + d + i] = 1.0;
  }
  const double tol = 1e-12 * std::max(scale, 1.0);

  Decomposition out;
  double det = 1.0;
  int row = 0;
  for (int col = 0; col < m && row < d; ++col) {
    int pivot = row;
    for (int i = row + 1; i < d; ++i) {
      if (std::abs(a[i * width + col]) > std::abs(a[pivot * width + col])) {
        pivot = i;
      }
    }
    if (std::abs(a[pivot * width + col]) <= tol) {
      det = 0.0;
      continue;
    }
    if (pivot != row) {
      for (int j = 0; j < width; ++j) std::swap(a[pivot * width + j], a[row * width + j]);
      det = -det;
    }
    const double p = a[row * width + col];
    det *= p;
    for (int j = 0; j < width; ++j) a[row * width + j] /= p;
    for (int i = 0; i < d; ++i) {
      if (i == row) continue;
      const double factor = a[i * width + col];
      if (factor == 0.0) continue;
      for (int j = 0; j < width; ++j) a[i * width + j] -= factor * a[row * width + j];
    }
    ++row;
  }
  out.rank = row;
  if (square && row == d) {
    out.det = det;
    out.inverse.assign(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) out.inverse[i][j] = a[i * width + d + j];
    }
  }
  return out;
}

}  // namespace

DirectionSet DirectionSet::validate(std::vector<std::vector<double>> columns) {
  if (columns.empty()) {
    throw ValidationError("direction set: no columns");
  }
  const int d = static_cast<int>(columns[0].size());
  if (d < 1) {
    throw ValidationError("direction set: ambient dimension must be >= 1");
  }
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != d) {
      throw ValidationError("direction set: ragged columns");
    }
    if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) {
      throw ValidationError("direction set: zero column");
    }
  }
  if (static_cast<int>(columns.size()) < d) {
    throw ValidationError("direction set: fewer columns than dimensions");
  }

  DirectionSet out;
  out.d_ = d;
  out.columns_ = std::move(columns);

  const Decomposition dec = decompose(out.columns_, d);
  if (dec.rank < d) {
    throw ValidationError("direction set: columns do not span R^d");
  }
  out.det_ = dec.det;
  out.inverse_ = dec.inverse;

  out.integer_columns_ = true;
  out.sign_convention_ok_ = true;
  for (const auto& c : out.columns_) {
    for (double v : c) {
      if (v != std::round(v)) out.integer_columns_ = false;
    }
    for (double v : c) {
      if (v != 0.0) {
        if (v < 0.0) out.sign_convention_ok_ = false;
        break;
      }
    }
  }
  return out;
}

double DirectionSet::dot(int j, std::span<const double> v) const {
  const auto& c = columns_[j];
  double s = 0.0;
  for (int i = 0; i < d_; ++i) s += c[i] * v[i];
  return s;
}

double DirectionSet::determinant() const {
  if (!square()) throw NotSquareError("determinant: n+1 != d");
  return det_;
}

const std::vector<std::vector<double>>& DirectionSet::inverse() const {
  if (!square()) throw NotSquareError("inverse: n+1 != d");
  return inverse_;
}

std::vector<double> DirectionSet::solve(std::span<const double> x) const {
  const auto& inv = inverse();
  std::vector<double> t(d_, 0.0);
  for (int i = 0; i < d_; ++i) {
    double s = 0.0;
    for (int j = 0; j < d_; ++j) s += inv[i][j] * x[j];
    t[i] = s;
  }
  return t;
}

DirectionSet DirectionSet::drop_last() const {
  std::vector<std::vector<double>> cols(columns_.begin(), columns_.end() - 1);
  return validate(std::move(cols));
}

std::vector<std::vector<double>> DirectionSet::support_box() const {
  const int n1 = count();
  const std::size_t total = std::size_t{1} << n1;
  std::vector<std::vector<double>> vertices;
  vertices.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<double> v(d_, 0.0);
    for (int j = 0; j < n1; ++j) {
      if (mask & (std::size_t{1} << j)) {
        for (int i = 0; i < d_; ++i) v[i] += columns_[j][i];
      }
    }
    vertices.push_back(std::move(v));
  }
  return vertices;
}

std::string DirectionSet::to_json_string() const {
  nlohmann::json j;
  j["d"] = d_;
  j["columns"] = columns_;
  return j.dump();
}

DirectionSet DirectionSet::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("d") || !j.contains("columns")) {
    throw ValidationError("direction set JSON: requires \"d\" and \"columns\"");
  }
  auto columns = j["columns"].get<std::vector<std::vector<double>>>();
  const int d = j["d"].get<int>();
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != d) {
      throw ValidationError("direction set JSON: column length != d");
    }
  }
  return validate(std::move(columns));
}

DetInverse det_and_inverse(const DirectionSet& m) {
  return {m.determinant(), m.inverse()};
}

}  // namespace cxbox
