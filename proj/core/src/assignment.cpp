#include "mssc/assignment.hpp"

#include <string>
#include <utility>

#include "mssc/error.hpp"

namespace mssc {

Assignment Assignment::from_matrix(const std::vector<std::vector<int>>& alpha) {
  if (alpha.empty()) throw input_error("assignment matrix must have at least one row");
  const std::size_t k = alpha.front().size();
  if (k == 0) throw input_error("assignment matrix must have at least one column");

  std::vector<std::size_t> labels(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].size() != k) {
      throw input_error("assignment row " + std::to_string(i + 1) + " has wrong length");
    }
    int row_sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const int v = alpha[i][j];
      if (v != 0 && v != 1) {
        throw input_error("assignment row " + std::to_string(i + 1) +
                          " has an entry outside {0,1}");
      }
      if (v == 1) labels[i] = j;
      row_sum += v;
    }
    if (row_sum != 1) {
      throw input_error("assignment row " + std::to_string(i + 1) + " sums to " +
                        std::to_string(row_sum) + ", expected 1");
    }
  }
  Assignment a;
  a.labels_ = std::move(labels);
  a.k_ = k;
  return a;
}

Assignment Assignment::from_labels(std::vector<std::size_t> labels, std::size_t k) {
  if (labels.empty()) throw input_error("assignment must cover at least one point");
  if (k == 0) throw input_error("assignment must have at least one cluster");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= k) {
      throw input_error("assignment label at row " + std::to_string(i + 1) + " out of range");
    }
  }
  Assignment a;
  a.labels_ = std::move(labels);
  a.k_ = k;
  return a;
}

}  // namespace mssc
