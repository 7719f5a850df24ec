#pragma once

#include <cstddef>
#include <vector>

namespace mssc {

// The m-by-k incident matrix alpha with entries in {0,1} and every row
// summing to exactly 1. Stored as the column index of the single 1 per
// row, which makes the row constraint hold by construction; the
// validating factory rejects fractional or multi-one rows up front.
class Assignment {
 public:
  // alpha[i][j] must be 0 or 1 with exactly one 1 per row.
  static Assignment from_matrix(const std::vector<std::vector<int>>& alpha);
  // labels[i] = j means alpha_ij = 1.
  static Assignment from_labels(std::vector<std::size_t> labels, std::size_t k);

  std::size_t rows() const { return labels_.size(); }  // m
  std::size_t cols() const { return k_; }              // k
  std::size_t label(std::size_t i) const { return labels_[i]; }
  int alpha(std::size_t i, std::size_t j) const { return labels_[i] == j ? 1 : 0; }

 private:
  Assignment() = default;

  std::vector<std::size_t> labels_;
  std::size_t k_ = 0;
};

}  // namespace mssc
