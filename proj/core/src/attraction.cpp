#include "mssc/attraction.hpp"

#include <limits>

#include "mssc/error.hpp"
#include "mssc/objective.hpp"

namespace mssc {

std::vector<std::size_t> nearest_index_set(const DataSet& data, const CentroidSystem& x,
                                           std::size_t i, double eps_tie) {
  require_same_dim(data, x);
  if (i >= data.size()) throw input_error("data index out of range");

  std::vector<double> dist(x.count());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < x.count(); ++j) {
    dist[j] = distance(data.point(i), x.centroid(j));
    best = std::min(best, dist[j]);
  }
  const double threshold = best + eps_tie * data.scale();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < x.count(); ++j) {
    if (dist[j] <= threshold) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> attraction_set(const DataSet& data, const CentroidSystem& x,
                                        std::size_t j, double eps_tie) {
  if (j >= x.count()) throw input_error("centroid slot out of range");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t q : nearest_index_set(data, x, i, eps_tie)) {
      if (q == j) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> attraction_sets(const DataSet& data,
                                                      const CentroidSystem& x, double eps_tie) {
  std::vector<std::vector<std::size_t>> sets(x.count());
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j : nearest_index_set(data, x, i, eps_tie)) sets[j].push_back(i);
  }
  return sets;
}

}  // namespace mssc
