#include "mssc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "mssc/attraction.hpp"
#include "mssc/error.hpp"
#include "mssc/objective.hpp"

namespace mssc {

namespace {

std::string stirling_text(std::uint64_t count) {
  if (count >= kStirlingSaturation) return "at least 10^18";
  return std::to_string(count);
}

// Enumeration preconditions shared by the exact solvers.
void check_enumeration_guards(const DataSet& data, std::size_t k, std::uint64_t budget) {
  if (k == 0) throw input_error("k must be positive");
  if (k > data.size()) {
    throw input_error("k = " + std::to_string(k) + " exceeds the number of data points m = " +
                      std::to_string(data.size()));
  }
  if (!data.pairwise_distinct()) {
    throw refusal_error(
        "exact enumeration requires pairwise-distinct data points; duplicated points make the "
        "solution set unbounded");
  }
  const std::uint64_t count = stirling2_saturated(data.size(), k);
  if (count > budget) {
    throw refusal_error("partition count S(" + std::to_string(data.size()) + "," +
                        std::to_string(k) + ") = " + stirling_text(count) +
                        " exceeds the candidate budget " + std::to_string(budget));
  }
}

bool lex_less_system(const CentroidSystem& a, const CentroidSystem& b) {
  for (std::size_t j = 0; j < a.count(); ++j) {
    if (lex_less(a.centroid(j), b.centroid(j))) return true;
    if (lex_less(b.centroid(j), a.centroid(j))) return false;
  }
  return false;
}

ClusterPartition permute_partition(const ClusterPartition& part,
                                   const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(part.cluster_count());
  for (std::size_t j : perm) sets.push_back(part.cluster(j));
  return ClusterPartition::from_sets(std::move(sets));
}

}  // namespace

std::uint64_t stirling2_saturated(std::size_t m, std::size_t k) {
  if (k == 0) return m == 0 ? 1 : 0;
  if (k > m) return 0;
  // S(i, j) = S(i-1, j-1) + j * S(i-1, j), row by row with saturation.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      const std::uint64_t carry = row[j - 1];
      const std::uint64_t keep = row[j];
      std::uint64_t v;
      if (keep > (kStirlingSaturation - carry) / j) {
        v = kStirlingSaturation;
      } else {
        v = carry + j * keep;
        v = std::min(v, kStirlingSaturation);
      }
      row[j] = v;
    }
    row[0] = 0;  // S(i, 0) = 0 for i >= 1
  }
  return row[k];
}

PartitionEnumerator::PartitionEnumerator(std::size_t m, std::size_t k, std::uint64_t budget)
    : m_(m), k_(k), labels_(m, 0) {
  if (k == 0 || m == 0) throw input_error("partition enumeration requires m >= k >= 1");
  if (k > m) throw input_error("cannot partition " + std::to_string(m) + " points into " +
                               std::to_string(k) + " nonempty blocks");
  total_count_ = stirling2_saturated(m, k);
  if (total_count_ > budget) {
    throw refusal_error("partition count S(" + std::to_string(m) + "," + std::to_string(k) +
                        ") = " + stirling_text(total_count_) +
                        " exceeds the candidate budget " + std::to_string(budget));
  }
  minimal_fill(1);
}

// Fills labels_[from..] with the smallest valid completion: label 0
// unless the remaining positions are exactly enough to open the blocks
// still missing, in which case a new block is forced.
void PartitionEnumerator::minimal_fill(std::size_t from) {
  std::size_t max_label = 0;
  for (std::size_t p = 0; p < from; ++p) max_label = std::max(max_label, labels_[p]);
  for (std::size_t p = from; p < m_; ++p) {
    const std::size_t missing = (k_ - 1) - max_label;  // blocks still to open
    const std::size_t remaining = m_ - p;              // positions left including p
    labels_[p] = (missing == remaining) ? max_label + 1 : 0;
    max_label = std::max(max_label, labels_[p]);
  }
}

bool PartitionEnumerator::advance() {
  // Rightmost position whose label can grow while a valid completion
  // still exists.
  std::vector<std::size_t> prefix_max(m_, 0);
  for (std::size_t p = 1; p < m_; ++p) {
    prefix_max[p] = std::max(prefix_max[p - 1], labels_[p - 1]);
  }
  for (std::size_t i = m_; i-- > 1;) {
    const std::size_t cap = std::min(prefix_max[i] + 1, k_ - 1);
    if (labels_[i] >= cap) continue;
    const std::size_t v = labels_[i] + 1;
    const std::size_t new_max = std::max(prefix_max[i], v);
    if ((k_ - 1) - new_max > (m_ - 1) - i) continue;  // cannot open enough blocks
    labels_[i] = v;
    minimal_fill(i + 1);
    return true;
  }
  return false;
}

ClusterPartition PartitionEnumerator::current() const {
  std::vector<std::vector<std::size_t>> sets(k_);
  for (std::size_t i = 0; i < m_; ++i) sets[labels_[i]].push_back(i);
  return ClusterPartition::from_sets(std::move(sets));
}

std::optional<ClusterPartition> PartitionEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (first_pending_) {
    first_pending_ = false;
    return current();
  }
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return current();
}

CentroidSystem candidate_from_partition(const DataSet& data, const ClusterPartition& part) {
  if (!part.all_nonempty()) {
    throw input_error("candidate construction requires every block to be nonempty");
  }
  std::vector<Vec> centroids;
  centroids.reserve(part.cluster_count());
  for (std::size_t j = 0; j < part.cluster_count(); ++j) {
    centroids.push_back(barycenter(data, part.cluster(j)));
  }
  return CentroidSystem::from_centroids(std::move(centroids));
}

GlobalSolveResult global_solve(const DataSet& data, std::size_t k, std::uint64_t budget,
                               double eps_tie) {
  check_enumeration_guards(data, k, budget);
  const double value_tol = kValueRelTol * data.scale() * data.scale();
  const double coord_tol = eps_tie * data.scale();

  GlobalSolveResult result;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, ClusterPartition>> near_best;

  PartitionEnumerator stream(data.size(), k, budget);
  while (auto part = stream.next()) {
    const CentroidSystem candidate = candidate_from_partition(data, *part);
    const double value = objective_f(data, candidate);
    ++result.candidates_evaluated;
    if (value < best) best = value;
    if (value <= best + value_tol) near_best.emplace_back(value, std::move(*part));
  }
  result.optimal_value = best;

  // Filter against the final minimum, canonicalize, deduplicate modulo
  // permutation, and sort for a stable output order.
  std::vector<std::pair<CentroidSystem, ClusterPartition>> kept;
  for (auto& [value, part] : near_best) {
    if (value > best + value_tol) continue;
    const CentroidSystem candidate = candidate_from_partition(data, part);
    const std::vector<std::size_t> perm = canonical_permutation(candidate);
    CentroidSystem canon = canonicalize(candidate);
    bool duplicate = false;
    for (const auto& [existing, unused] : kept) {
      if (equal_mod_permutation(existing, canon, coord_tol)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.emplace_back(std::move(canon), permute_partition(part, perm));
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return lex_less_system(a.first, b.first); });
  for (auto& [system, part] : kept) {
    result.global_solutions.push_back(std::move(system));
    result.partition_of_each.push_back(std::move(part));
  }
  return result;
}

std::vector<CoreLocalSolution> enumerate_core_local_solutions(const DataSet& data, std::size_t k,
                                                              std::uint64_t budget,
                                                              const CertifyOptions& opts) {
  check_enumeration_guards(data, k, budget);
  const double coord_tol = opts.eps_tie * data.scale();

  double best = std::numeric_limits<double>::infinity();
  std::vector<CoreLocalSolution> found;
  PartitionEnumerator stream(data.size(), k, budget);
  while (auto part = stream.next()) {
    const CentroidSystem candidate = candidate_from_partition(data, *part);
    best = std::min(best, objective_f(data, candidate));
    CertificationReport report = certify_nontrivial_local(data, candidate, opts);
    if (report.verdict != Verdict::NontrivialLocal) continue;
    const std::vector<std::size_t> perm = canonical_permutation(candidate);
    CentroidSystem canon = canonicalize(candidate);
    bool duplicate = false;
    for (const CoreLocalSolution& s : found) {
      if (equal_mod_permutation(s.centroids, canon, coord_tol)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    found.push_back(CoreLocalSolution{std::move(canon), permute_partition(*part, perm),
                                      std::move(report)});
  }

  // The enumeration minimum is the exact optimal value, so the verdicts
  // can be refined in place.
  const double gap_tol = kGlobalGapRelTol * data.scale() * data.scale();
  for (CoreLocalSolution& s : found) {
    s.report.oracle_ran = true;
    s.report.optimal_value = best;
    s.report.optimal_value_gap = s.report.objective - best;
    s.report.verdict = (*s.report.optimal_value_gap <= gap_tol) ? Verdict::Global
                                                                : Verdict::LocalNonGlobal;
  }
  std::sort(found.begin(), found.end(), [](const CoreLocalSolution& a,
                                           const CoreLocalSolution& b) {
    return lex_less_system(a.centroids, b.centroids);
  });
  return found;
}

std::vector<LocalFamily> describe_local_families(const DataSet& data, std::size_t k,
                                                 std::uint64_t budget,
                                                 const CertifyOptions& opts) {
  std::vector<LocalFamily> families;
  if (k < 2) return families;
  check_enumeration_guards(data, k - 1, budget);

  PartitionEnumerator stream(data.size(), k - 1, budget);
  while (auto part = stream.next()) {
    const CentroidSystem core = candidate_from_partition(data, *part);
    const CertificationReport report = certify_nontrivial_local(data, core, opts);
    if (report.verdict != Verdict::NontrivialLocal) continue;
    // Every slot of the core must be attractive; a slot with no
    // attracted points would need its own exclusion analysis.
    bool all_attractive = true;
    for (const auto& residual : report.barycenter_residuals) {
      if (!residual.has_value()) {
        all_attractive = false;
        break;
      }
    }
    if (!all_attractive) continue;

    const CentroidSystem& canon = *report.centroids;
    std::vector<LocalFamily::Ball> balls;
    for (std::size_t p = 0; p < data.size(); ++p) {
      double radius = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < canon.count(); ++j) {
        radius = std::min(radius, distance(data.point(p), canon.centroid(j)));
      }
      balls.push_back(LocalFamily::Ball{p, data.point(p), radius});
    }
    families.push_back(LocalFamily{canon, std::move(balls)});
  }
  std::sort(families.begin(), families.end(), [](const LocalFamily& a, const LocalFamily& b) {
    return lex_less_system(a.core, b.core);
  });
  return families;
}

}  // namespace mssc
