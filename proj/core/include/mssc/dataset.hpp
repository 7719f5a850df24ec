#pragma once

#include <cstddef>
#include <vector>

#include "mssc/geometry.hpp"

namespace mssc {

// Relative tolerance for distance ties. Two distances from a data point to
// candidate centroids are tied when they differ by at most
// eps_tie * scale, with scale = 1 + max_i ||a_i||.
inline constexpr double kDefaultEpsTie = 1e-9;

// The data points a_1, ..., a_m in R^n, plus distinctness metadata.
// Immutable after construction.
class DataSet {
 public:
  static DataSet from_points(std::vector<Vec> points, double eps_tie = kDefaultEpsTie);

  std::size_t size() const { return points_.size(); }  // m
  std::size_t dim() const { return dim_; }             // n
  const Vec& point(std::size_t i) const { return points_[i]; }
  const std::vector<Vec>& points() const { return points_; }

  // True iff min_{i<i'} ||a_i - a_i'|| > eps_tie * scale.
  bool pairwise_distinct() const { return pairwise_distinct_; }
  double scale() const { return scale_; }  // 1 + max_i ||a_i||
  // +infinity when m == 1.
  double min_pairwise_distance() const { return min_pairwise_distance_; }
  double eps_tie() const { return eps_tie_; }
  // Absolute tie threshold: eps_tie * scale.
  double tie_tolerance() const { return eps_tie_ * scale_; }

 private:
  DataSet() = default;

  std::vector<Vec> points_;
  std::size_t dim_ = 0;
  double eps_tie_ = kDefaultEpsTie;
  double scale_ = 1.0;
  double min_pairwise_distance_ = 0.0;
  bool pairwise_distinct_ = false;
};

}  // namespace mssc
