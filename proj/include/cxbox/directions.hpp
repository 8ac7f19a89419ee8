#pragma once

#include <span>
#include <string>
#include <vector>

#include "cxbox/errors.hpp"

namespace cxbox {

// Validated d x (n+1) matrix of direction columns. Columns are stored in
// declared order (the degree vector is positionally aligned with them) and
// the object is immutable after validation.
class DirectionSet {
 public:
  // Throws ValidationError on a zero column or rank < d. A violated
  // sign convention (first nonzero component of a column negative) is not
  // an error; it only blocks time-domain truncated-power evaluation and is
  // reported through sign_convention_ok().
  static DirectionSet validate(std::vector<std::vector<double>> columns);

  int dim() const { return d_; }
  int count() const { return static_cast<int>(columns_.size()); }
  const std::vector<double>& column(int j) const { return columns_[j]; }
  const std::vector<std::vector<double>>& columns() const { return columns_; }

  bool integer_columns() const { return integer_columns_; }
  bool sign_convention_ok() const { return sign_convention_ok_; }
  bool square() const { return count() == dim(); }

  double dot(int j, std::span<const double> v) const;

  // Determinant and M^{-1} x; both throw NotSquareError when n+1 != d.
  double determinant() const;
  std::vector<double> solve(std::span<const double> x) const;
  const std::vector<std::vector<double>>& inverse() const;

  // Direction set with the last column removed (revalidated; throws
  // ValidationError if the remaining columns no longer span R^d).
  DirectionSet drop_last() const;

  // The 2^{n+1} images of the unit-cube vertices under M (zonotope
  // generator representation of supp = M([0,1)^{n+1})).
  std::vector<std::vector<double>> support_box() const;

  std::string to_json_string() const;
  static DirectionSet from_json_string(const std::string& text);

 private:
  DirectionSet() = default;

  int d_ = 0;
  std::vector<std::vector<double>> columns_;
  bool integer_columns_ = false;
  bool sign_convention_ok_ = false;
  // Cached inverse for square sets (empty otherwise).
  std::vector<std::vector<double>> inverse_;
  double det_ = 0.0;
};

struct DetInverse {
  double det;
  std::vector<std::vector<double>> inverse;
};

DetInverse det_and_inverse(const DirectionSet& m);

}  // namespace cxbox
