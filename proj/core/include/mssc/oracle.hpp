#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mssc/centroid_system.hpp"
#include "mssc/certify.hpp"
#include "mssc/dataset.hpp"
#include "mssc/partition.hpp"

namespace mssc {

// Largest candidate count the enumeration oracle will attempt.
inline constexpr std::uint64_t kDefaultCandidateBudget = 10'000'000;

// Relative tolerance on objective values when collecting the argmin set.
inline constexpr double kValueRelTol = 1e-12;

// S(m, k), the number of partitions of an m-set into k nonempty
// unlabeled blocks, saturating at kStirlingSaturation instead of
// overflowing.
inline constexpr std::uint64_t kStirlingSaturation = 1'000'000'000'000'000'000ULL;
std::uint64_t stirling2_saturated(std::size_t m, std::size_t k);

// Streams every partition of {0, ..., m-1} into exactly k nonempty
// blocks exactly once, blocks ordered by their minimal element
// (restricted-growth-string order). The constructor enforces the
// candidate budget up front and refuses with the Stirling count.
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t m, std::size_t k,
                      std::uint64_t budget = kDefaultCandidateBudget);

  // Next partition, or nullopt when exhausted.
  std::optional<ClusterPartition> next();

  std::uint64_t total_count() const { return total_count_; }

 private:
  bool advance();
  void minimal_fill(std::size_t from);
  ClusterPartition current() const;

  std::size_t m_;
  std::size_t k_;
  std::vector<std::size_t> labels_;
  bool exhausted_ = false;
  bool first_pending_ = true;
  std::uint64_t total_count_ = 0;
};

// Barycenter system of a full partition: slot j is the barycenter of
// block j. Every block must be nonempty.
CentroidSystem candidate_from_partition(const DataSet& data, const ClusterPartition& part);

struct GlobalSolveResult {
  double optimal_value = 0.0;  // v(a)
  // Canonicalized, deduplicated modulo permutation, sorted
  // lexicographically; partitions carry the matching slot order.
  std::vector<CentroidSystem> global_solutions;
  std::vector<ClusterPartition> partition_of_each;
  std::uint64_t candidates_evaluated = 0;
};

// Exact global solve by evaluating f at every barycenter candidate.
// Sound because every global solution's components are attraction-set
// barycenters when the data points are pairwise distinct; refuses on
// duplicated data or when the enumeration exceeds the budget.
GlobalSolveResult global_solve(const DataSet& data, std::size_t k,
                               std::uint64_t budget = kDefaultCandidateBudget,
                               double eps_tie = kDefaultEpsTie);

struct CoreLocalSolution {
  CentroidSystem centroids;    // canonical form
  ClusterPartition partition;  // aligned with the canonical slots
  CertificationReport report;
};

// All nontrivial local solutions whose slots are all attractive: the
// barycenter candidates that pass certification. Verdicts are refined
// against the enumeration's own optimal value (Global / LocalNonGlobal).
std::vector<CoreLocalSolution> enumerate_core_local_solutions(
    const DataSet& data, std::size_t k, std::uint64_t budget = kDefaultCandidateBudget,
    const CertifyOptions& opts = {});

// Symbolic description of the infinite local-solution families with one
// free slot: a (k-1)-slot core that is itself a nontrivial local
// solution with every slot attractive, plus the exclusion balls the
// free slot must avoid. The family is all k-systems (core, y) with y
// strictly outside every ball.
struct LocalFamily {
  CentroidSystem core;  // k-1 slots, canonical form
  struct Ball {
    std::size_t point_index = 0;  // 0-based data index of the center
    Vec center;
    double radius = 0.0;  // distance from the point to its core centroid
  };
  std::vector<Ball> balls;
};

std::vector<LocalFamily> describe_local_families(const DataSet& data, std::size_t k,
                                                 std::uint64_t budget = kDefaultCandidateBudget,
                                                 const CertifyOptions& opts = {});

}  // namespace mssc
