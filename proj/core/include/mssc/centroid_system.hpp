#pragma once

#include <cstddef>
#include <vector>

#include "mssc/geometry.hpp"

namespace mssc {

// A candidate solution x = (x_1, ..., x_k), each x_j in R^n.
// Slot order is meaningful to callers (the objective is permutation
// invariant, but traces and reports keep slots stable).
class CentroidSystem {
 public:
  static CentroidSystem from_centroids(std::vector<Vec> centroids);

  std::size_t count() const { return centroids_.size(); }  // k
  std::size_t dim() const { return dim_; }                 // n
  const Vec& centroid(std::size_t j) const { return centroids_[j]; }
  const std::vector<Vec>& centroids() const { return centroids_; }

  // Returns a copy with slot j replaced. Validates dimension.
  CentroidSystem with_centroid(std::size_t j, Vec value) const;

  // Sum norm distance: sum_j ||x_j - y_j||.
  double sum_norm_distance_to(const CentroidSystem& other) const;

 private:
  CentroidSystem() = default;

  std::vector<Vec> centroids_;
  std::size_t dim_ = 0;
};

}  // namespace mssc
