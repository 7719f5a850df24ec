#include "mssc/centroid_system.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mssc/error.hpp"

namespace mssc {

CentroidSystem CentroidSystem::from_centroids(std::vector<Vec> centroids) {
  if (centroids.empty()) throw input_error("centroid system must contain at least one centroid");
  const std::size_t n = centroids.front().size();
  if (n == 0) throw input_error("centroids must have at least one coordinate");
  for (std::size_t j = 0; j < centroids.size(); ++j) {
    if (centroids[j].size() != n) {
      throw input_error("centroid " + std::to_string(j + 1) + " has " +
                        std::to_string(centroids[j].size()) + " coordinates, expected " +
                        std::to_string(n));
    }
    for (double c : centroids[j]) {
      if (!std::isfinite(c)) {
        throw input_error("centroid " + std::to_string(j + 1) + " has a non-finite coordinate");
      }
    }
  }
  CentroidSystem x;
  x.centroids_ = std::move(centroids);
  x.dim_ = n;
  return x;
}

CentroidSystem CentroidSystem::with_centroid(std::size_t j, Vec value) const {
  if (j >= centroids_.size()) throw input_error("centroid slot out of range");
  if (value.size() != dim_) throw input_error("replacement centroid has wrong dimension");
  CentroidSystem out = *this;
  out.centroids_[j] = std::move(value);
  return out;
}

double CentroidSystem::sum_norm_distance_to(const CentroidSystem& other) const {
  if (other.count() != count() || other.dim() != dim()) {
    throw input_error("centroid systems differ in shape");
  }
  return sum_norm_distance(centroids_, other.centroids_);
}

}  // namespace mssc
