#include "mssc/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "mssc/error.hpp"

namespace mssc {

ClusterPartition ClusterPartition::from_sets(std::vector<std::vector<std::size_t>> sets) {
  if (sets.empty()) throw input_error("partition must contain at least one index set");
  std::unordered_set<std::size_t> seen;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    for (std::size_t idx : s) {
      if (!seen.insert(idx).second) {
        throw input_error("index " + std::to_string(idx + 1) +
                          " appears in more than one cluster");
      }
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw input_error("duplicate index inside a cluster");
    }
  }
  ClusterPartition p;
  p.sets_ = std::move(sets);
  return p;
}

std::size_t ClusterPartition::total_assigned() const {
  std::size_t t = 0;
  for (const auto& s : sets_) t += s.size();
  return t;
}

bool ClusterPartition::all_nonempty() const {
  for (const auto& s : sets_) {
    if (s.empty()) return false;
  }
  return true;
}

bool ClusterPartition::covers(std::size_t m) const {
  if (total_assigned() != m) return false;
  for (const auto& s : sets_) {
    for (std::size_t idx : s) {
      if (idx >= m) return false;
    }
  }
  return true;
}

}  // namespace mssc
