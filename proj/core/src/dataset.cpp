#include "mssc/dataset.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "mssc/error.hpp"

namespace mssc {

DataSet DataSet::from_points(std::vector<Vec> points, double eps_tie) {
  if (points.empty()) throw input_error("dataset must contain at least one point");
  const std::size_t n = points.front().size();
  if (n == 0) throw input_error("data points must have at least one coordinate");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n) {
      throw input_error("point " + std::to_string(i + 1) + " has " +
                        std::to_string(points[i].size()) + " coordinates, expected " +
                        std::to_string(n));
    }
    for (double c : points[i]) {
      if (!std::isfinite(c)) {
        throw input_error("point " + std::to_string(i + 1) + " has a non-finite coordinate");
      }
    }
  }
  if (!(eps_tie >= 0.0) || !std::isfinite(eps_tie)) {
    throw input_error("eps_tie must be a finite nonnegative number");
  }

  DataSet d;
  d.points_ = std::move(points);
  d.dim_ = n;
  d.eps_tie_ = eps_tie;

  double max_norm = 0.0;
  for (const Vec& p : d.points_) max_norm = std::max(max_norm, norm(p));
  d.scale_ = 1.0 + max_norm;

  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < d.points_.size(); ++i) {
    for (std::size_t j = i + 1; j < d.points_.size(); ++j) {
      min_dist = std::min(min_dist, distance(d.points_[i], d.points_[j]));
    }
  }
  d.min_pairwise_distance_ = min_dist;
  d.pairwise_distinct_ = min_dist > eps_tie * d.scale_;
  return d;
}

}  // namespace mssc
