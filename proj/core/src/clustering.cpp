#include "mssc/clustering.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mssc/attraction.hpp"
#include "mssc/error.hpp"
#include "mssc/objective.hpp"

namespace mssc {

ClusterPartition natural_clustering(const DataSet& data, const CentroidSystem& x,
                                    double eps_tie) {
  require_same_dim(data, x);
  std::vector<std::vector<std::size_t>> sets(x.count());
  for (std::size_t i = 0; i < data.size(); ++i) {
    // nearest_index_set is sorted ascending, so front() is the
    // lowest-index nearest centroid: exactly the sequential rule.
    const std::size_t j = nearest_index_set(data, x, i, eps_tie).front();
    sets[j].push_back(i);
  }
  return ClusterPartition::from_sets(std::move(sets));
}

Assignment assignment_from_partition(const ClusterPartition& part, std::size_t m,
                                     std::size_t k) {
  if (part.cluster_count() != k) {
    throw input_error("partition has " + std::to_string(part.cluster_count()) +
                      " clusters, expected " + std::to_string(k));
  }
  if (!part.covers(m)) {
    throw input_error("partition does not cover every data index exactly once");
  }
  std::vector<std::size_t> labels(m);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i : part.cluster(j)) labels[i] = j;
  }
  return Assignment::from_labels(std::move(labels), k);
}

KMeansResult kmeans(const DataSet& data, const CentroidSystem& init, double epsilon,
                    std::size_t max_iter, double eps_tie) {
  require_same_dim(data, init);
  if (epsilon < 0.0) throw input_error("epsilon must be nonnegative");
  if (max_iter == 0) throw input_error("max_iter must be positive");

  CentroidSystem current = init;
  KMeansTrace trace;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    ClusterPartition clusters = natural_clustering(data, current, eps_tie);
    std::vector<Vec> updated = current.centroids();
    double max_shift = 0.0;
    for (std::size_t j = 0; j < current.count(); ++j) {
      if (clusters.cluster(j).empty()) continue;  // empty clusters keep their centroid
      updated[j] = barycenter(data, clusters.cluster(j));
      max_shift = std::max(max_shift, distance(updated[j], current.centroid(j)));
    }
    current = CentroidSystem::from_centroids(std::move(updated));
    trace.iterations.push_back(KMeansIteration{current, clusters,
                                               objective_f(data, current), max_shift});
    trace.iterations_used = iter + 1;
    if (max_shift <= epsilon) {
      trace.converged = true;
      break;
    }
  }
  return KMeansResult{current, std::move(trace)};
}

CentroidSystem initial_centroids(const DataSet& data, std::size_t k, InitStrategy strategy,
                                 std::uint64_t seed,
                                 const std::optional<CentroidSystem>& explicit_centroids) {
  if (k == 0) throw input_error("k must be positive");
  if (strategy == InitStrategy::Explicit) {
    if (!explicit_centroids) throw input_error("explicit initialization requires centroids");
    if (explicit_centroids->dim() != data.dim()) {
      throw input_error("explicit centroids do not match the data dimension");
    }
    return *explicit_centroids;
  }
  if (k > data.size()) {
    throw input_error("k = " + std::to_string(k) + " exceeds the number of data points m = " +
                      std::to_string(data.size()));
  }
  std::vector<Vec> chosen;
  if (strategy == InitStrategy::FirstK) {
    for (std::size_t i = 0; i < k; ++i) chosen.push_back(data.point(i));
  } else {
    // Fisher-Yates prefix over the index range; mt19937_64 keeps the
    // draw reproducible for a fixed seed.
    std::vector<std::size_t> idx(data.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t r = i + static_cast<std::size_t>(rng() % (idx.size() - i));
      std::swap(idx[i], idx[r]);
      chosen.push_back(data.point(idx[i]));
    }
  }
  return CentroidSystem::from_centroids(std::move(chosen));
}

}  // namespace mssc
