#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mssc/assignment.hpp"
#include "mssc/centroid_system.hpp"
#include "mssc/dataset.hpp"
#include "mssc/partition.hpp"

namespace mssc {

// Sequential-removal clustering: cluster 1 takes the full attraction set
// of slot 1, cluster j takes slot j's attraction set minus everything
// already claimed. A point tied between several centroids therefore
// lands in the lowest-index one. Sets are disjoint and cover all points;
// sets may be empty.
ClusterPartition natural_clustering(const DataSet& data, const CentroidSystem& x,
                                    double eps_tie = kDefaultEpsTie);

// Incident matrix of a full partition: alpha_ij = 1 iff i belongs to
// cluster j. Rejects non-covering or overlapping partitions.
Assignment assignment_from_partition(const ClusterPartition& part, std::size_t m, std::size_t k);

struct KMeansIteration {
  CentroidSystem centroids;   // after the update sweep
  ClusterPartition clusters;  // the clusters that produced the update
  double objective = 0.0;     // f at the updated centroids
  double max_centroid_shift = 0.0;  // over slots with nonempty clusters
};

struct KMeansTrace {
  std::vector<KMeansIteration> iterations;
  bool converged = false;
  std::size_t iterations_used = 0;
};

struct KMeansResult {
  CentroidSystem final_centroids;
  KMeansTrace trace;
};

// The plain alternating scheme: form the natural clustering, replace
// each centroid that owns a nonempty cluster by that cluster's
// barycenter, keep the others unchanged, and stop once every updated
// centroid moved at most epsilon. Exhausting max_iter returns the last
// iterate with converged = false rather than throwing.
KMeansResult kmeans(const DataSet& data, const CentroidSystem& init, double epsilon = 0.0,
                    std::size_t max_iter = 1000, double eps_tie = kDefaultEpsTie);

enum class InitStrategy { FirstK, RandomPoints, Explicit };

// FirstK: the first k data points. RandomPoints: k distinct data points
// drawn without replacement, reproducible for a fixed seed. Explicit:
// the supplied system passed through unchanged.
CentroidSystem initial_centroids(const DataSet& data, std::size_t k, InitStrategy strategy,
                                 std::uint64_t seed = 0,
                                 const std::optional<CentroidSystem>& explicit_centroids = {});

}  // namespace mssc
