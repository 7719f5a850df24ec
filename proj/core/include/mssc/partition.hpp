#pragma once

#include <cstddef>
#include <vector>

namespace mssc {

// k index sets I(1), ..., I(k) over data indices {0, ..., m-1}.
// Individual sets may be empty (a centroid with no attracted points);
// a full partition additionally has every set nonempty and the union
// equal to {0, ..., m-1}.
class ClusterPartition {
 public:
  // Sets are sorted ascending; pairwise disjointness is validated.
  static ClusterPartition from_sets(std::vector<std::vector<std::size_t>> sets);

  std::size_t cluster_count() const { return sets_.size(); }  // k
  const std::vector<std::size_t>& cluster(std::size_t j) const { return sets_[j]; }
  const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }

  std::size_t total_assigned() const;
  bool all_nonempty() const;
  // Union equals {0, ..., m-1}; disjointness already holds by construction.
  bool covers(std::size_t m) const;

 private:
  ClusterPartition() = default;

  std::vector<std::vector<std::size_t>> sets_;
};

}  // namespace mssc
