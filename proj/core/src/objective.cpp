#include "mssc/objective.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "mssc/error.hpp"

namespace mssc {

void require_same_dim(const DataSet& data, const CentroidSystem& x) {
  if (data.dim() != x.dim()) {
    throw input_error("dimension mismatch: data points have " + std::to_string(data.dim()) +
                      " coordinates, centroids have " + std::to_string(x.dim()));
  }
}

double objective_f(const DataSet& data, const CentroidSystem& x) {
  require_same_dim(data, x);
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < x.count(); ++j) {
      best = std::min(best, squared_distance(data.point(i), x.centroid(j)));
    }
    total += best;
  }
  return total / static_cast<double>(data.size());
}

double objective_psi(const DataSet& data, const CentroidSystem& x, const Assignment& alpha) {
  require_same_dim(data, x);
  if (alpha.rows() != data.size() || alpha.cols() != x.count()) {
    throw input_error("assignment shape does not match data and centroid system");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    total += squared_distance(data.point(i), x.centroid(alpha.label(i)));
  }
  return total / static_cast<double>(data.size());
}

Vec barycenter(const DataSet& data, const std::vector<std::size_t>& idx) {
  if (idx.empty()) throw input_error("barycenter of an empty index set is undefined");
  Vec b(data.dim(), 0.0);
  for (std::size_t i : idx) {
    if (i >= data.size()) throw input_error("barycenter index out of range");
    const Vec& p = data.point(i);
    for (std::size_t c = 0; c < b.size(); ++c) b[c] += p[c];
  }
  for (double& c : b) c /= static_cast<double>(idx.size());
  return b;
}

Vec data_barycenter(const DataSet& data) {
  std::vector<std::size_t> all(data.size());
  std::iota(all.begin(), all.end(), 0);
  return barycenter(data, all);
}

}  // namespace mssc
