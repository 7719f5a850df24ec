#include "mssc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mssc/attraction.hpp"
#include "mssc/clustering.hpp"
#include "mssc/error.hpp"
#include "mssc/objective.hpp"

namespace mssc {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Distribution helpers on top of mt19937_64. Hand-rolled so the draws
// are identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  // Box-Muller; u1 pushed away from zero to keep the log finite.
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

double sum_norm_of(const std::vector<Vec>& stacked) {
  double s = 0.0;
  for (const Vec& v : stacked) s += norm(v);
  return s;
}

// Exact minimum over slot permutations of the sum-norm distance between
// two systems. Factorial search; probes target small k. Falls back to
// canonical slot alignment beyond 8 slots.
double permuted_distance(const CentroidSystem& x, const CentroidSystem& y) {
  const std::size_t k = x.count();
  if (k > 8) return canonicalize(x).sum_norm_distance_to(canonicalize(y));
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double d = 0.0;
    for (std::size_t j = 0; j < k; ++j) d += distance(x.centroid(perm[j]), y.centroid(j));
    best = std::min(best, d);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void record_worst(StabilityProbeReport& rep, double ratio, double numerator, double denominator,
                  const DataSet& first, const DataSet& second) {
  if (ratio <= rep.max_ratio && !rep.worst_first.empty()) return;
  rep.max_ratio = std::max(rep.max_ratio, ratio);
  rep.worst_first = first.points();
  rep.worst_second = second.points();
  rep.worst_numerator = numerator;
  rep.worst_denominator = denominator;
}

constexpr double kDenominatorFloor = 1e-12;

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

DataSet perturb(const DataSet& data, double delta, std::mt19937_64& rng) {
  if (!(delta > 0.0)) throw input_error("perturbation radius delta must be positive");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vec> direction(data.size(), Vec(data.dim(), 0.0));
    for (Vec& g : direction) {
      for (double& c : g) c = gaussian(rng);
    }
    const double total = sum_norm_of(direction);
    if (total == 0.0) continue;
    double u = uniform01(rng);
    while (u == 0.0) u = uniform01(rng);
    const double radius = u * delta;
    std::vector<Vec> moved = data.points();
    for (std::size_t i = 0; i < moved.size(); ++i) {
      for (std::size_t c = 0; c < moved[i].size(); ++c) {
        moved[i][c] += (radius / total) * direction[i][c];
      }
    }
    DataSet out = DataSet::from_points(std::move(moved), data.eps_tie());
    if (!data.pairwise_distinct() || out.pairwise_distinct()) return out;
  }
  throw refusal_error(
      "could not preserve pairwise distinctness after 100 perturbation draws; delta is too "
      "large relative to the data separation");
}

DataSet perturb(const DataSet& data, double delta, std::uint64_t seed) {
  std::mt19937_64 rng = trial_rng(seed, 0);
  return perturb(data, delta, rng);
}

double default_probe_delta(const DataSet& data) {
  const double d = data.min_pairwise_distance();
  return std::isfinite(d) ? 0.01 * d : 0.01 * data.scale();
}

std::string probe_kind_name(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::ValueLipschitz: return "value_lipschitz";
    case ProbeKind::GlobalUpperLipschitz: return "global_upper_lipschitz";
    case ProbeKind::AubinLocal: return "aubin_local";
  }
  return "unknown";
}

StabilityProbeReport probe_value_lipschitz(const DataSet& data0, std::size_t k, double delta,
                                           std::size_t trials, std::uint64_t seed,
                                           std::uint64_t budget) {
  StabilityProbeReport rep;
  rep.kind = ProbeKind::ValueLipschitz;
  rep.trials = trials;
  rep.delta = delta;

  const GlobalSolveResult base = global_solve(data0, k, budget);
  rep.reference_count = base.partition_of_each.size();
  const double value_tol = kValueRelTol * data0.scale() * data0.scale();

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng_a = trial_rng(seed, 2 * t);
    std::mt19937_64 rng_b = trial_rng(seed, 2 * t + 1);
    const DataSet a = perturb(data0, delta, rng_a);
    const DataSet b = perturb(data0, delta, rng_b);
    const double dist = sum_norm_distance(a.points(), b.points());
    if (dist < kDenominatorFloor) {
      ++rep.skipped;
      continue;
    }
    const double va = global_solve(a, k, budget).optimal_value;
    const double vb = global_solve(b, k, budget).optimal_value;

    // Candidate formula: near the base data the optimal value must be
    // attained on the argmin partitions recorded there.
    for (const DataSet* d : {&a, &b}) {
      const double v = (d == &a) ? va : vb;
      double candidate_min = std::numeric_limits<double>::infinity();
      for (const ClusterPartition& part : base.partition_of_each) {
        candidate_min =
            std::min(candidate_min, objective_f(*d, candidate_from_partition(*d, part)));
      }
      if (std::fabs(candidate_min - v) > value_tol) ++rep.violations;
    }

    const double ratio = std::fabs(va - vb) / dist;
    record_worst(rep, ratio, std::fabs(va - vb), dist, a, b);
  }
  return rep;
}

StabilityProbeReport probe_global_upper_lipschitz(const DataSet& data0, std::size_t k,
                                                  double delta, std::size_t trials,
                                                  std::uint64_t seed, std::uint64_t budget) {
  StabilityProbeReport rep;
  rep.kind = ProbeKind::GlobalUpperLipschitz;
  rep.trials = trials;
  rep.delta = delta;

  const GlobalSolveResult base = global_solve(data0, k, budget);
  rep.reference_count = base.global_solutions.size();

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = trial_rng(seed, t);
    const DataSet a = perturb(data0, delta, rng);
    const double dist = sum_norm_distance(a.points(), data0.points());
    if (dist < kDenominatorFloor) {
      ++rep.skipped;
      continue;
    }
    const GlobalSolveResult solved = global_solve(a, k, budget);
    for (const CentroidSystem& x : solved.global_solutions) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_ref = 0;
      for (std::size_t r = 0; r < base.global_solutions.size(); ++r) {
        const double d = permuted_distance(x, base.global_solutions[r]);
        if (d < best) {
          best = d;
          best_ref = r;
        }
      }
      const double ratio = best / dist;
      if (ratio > rep.max_ratio || rep.worst_first.empty()) {
        rep.worst_matched_reference = best_ref;
      }
      record_worst(rep, ratio, best, dist, a, data0);
    }
  }
  return rep;
}

StabilityProbeReport probe_aubin_local(const DataSet& data0, const CentroidSystem& xbar,
                                       double delta1, std::size_t trials, std::uint64_t seed,
                                       const AubinOptions& options) {
  StabilityProbeReport rep;
  rep.kind = ProbeKind::AubinLocal;
  rep.trials = trials;
  rep.delta = delta1;

  const CertificationReport base_cert =
      certify_nontrivial_local(data0, xbar, options.certify);
  if (base_cert.verdict != Verdict::NontrivialLocal) {
    throw input_error("the Aubin probe requires a centroid system certifying NontrivialLocal "
                      "at the base data (got verdict " +
                      verdict_name(base_cert.verdict) + ")");
  }
  const CentroidSystem base = *base_cert.centroids;  // canonical slot order
  const std::vector<std::vector<std::size_t>> fixed_sets =
      attraction_sets(data0, base, options.certify.eps_tie);
  rep.reference_count = 1;

  // Re-averages the attractive slots over the fixed index sets; slots
  // with empty attraction sets stay at the base position.
  const auto construct = [&](const DataSet& d) {
    std::vector<Vec> slots = base.centroids();
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (!fixed_sets[j].empty()) slots[j] = barycenter(d, fixed_sets[j]);
    }
    return CentroidSystem::from_centroids(std::move(slots));
  };

  // Counterpart at the second data set for an arbitrary certified member
  // of the local solution set: same recipe, index sets taken from the
  // member's own attraction structure.
  const auto counterpart = [&](const DataSet& from, const CentroidSystem& member,
                               const DataSet& to) {
    const auto sets = attraction_sets(from, member, options.certify.eps_tie);
    std::vector<Vec> slots = member.centroids();
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (!sets[j].empty()) slots[j] = barycenter(to, sets[j]);
    }
    return CentroidSystem::from_centroids(std::move(slots));
  };

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng_a = trial_rng(seed, 2 * t);
    std::mt19937_64 rng_b = trial_rng(seed, 2 * t + 1);
    const DataSet a = perturb(data0, delta1, rng_a);
    const DataSet atilde = perturb(data0, delta1, rng_b);
    const double dist = sum_norm_distance(a.points(), atilde.points());

    const CentroidSystem x = construct(a);
    const CentroidSystem xtilde = construct(atilde);
    rep.constructed_points += 2;
    const bool x_ok =
        certify_nontrivial_local(a, x, options.certify).verdict == Verdict::NontrivialLocal;
    const bool xt_ok = certify_nontrivial_local(atilde, xtilde, options.certify).verdict ==
                       Verdict::NontrivialLocal;
    rep.certified_points += static_cast<std::size_t>(x_ok) + static_cast<std::size_t>(xt_ok);
    if (!x_ok || !xt_ok) ++rep.violations;

    if (dist < kDenominatorFloor) {
      ++rep.skipped;
    } else {
      const double ratio = x.sum_norm_distance_to(xtilde) / dist;
      record_worst(rep, ratio, x.sum_norm_distance_to(xtilde), dist, a, atilde);
    }

    if (!options.include_kmeans_members || dist < kDenominatorFloor) continue;

    // Additional members of F1(a) near xbar: k-means fixed points seeded
    // at the base solution. A fixed point that fails certification is
    // simply not a member of the local solution set, so no claim covers
    // it; a certified member whose constructed counterpart fails is a
    // genuine violation.
    const KMeansResult km = kmeans(a, base, 0.0, 1000, options.certify.eps_tie);
    if (!km.trace.converged) continue;
    if (km.final_centroids.sum_norm_distance_to(base) > options.eps) continue;
    const CertificationReport member_cert =
        certify_nontrivial_local(a, km.final_centroids, options.certify);
    if (member_cert.verdict != Verdict::NontrivialLocal) continue;

    const CentroidSystem mapped = counterpart(a, km.final_centroids, atilde);
    ++rep.constructed_points;
    const bool mapped_ok =
        certify_nontrivial_local(atilde, mapped, options.certify).verdict ==
        Verdict::NontrivialLocal;
    if (mapped_ok) {
      ++rep.certified_points;
    } else {
      ++rep.violations;
      continue;
    }
    const double ratio = km.final_centroids.sum_norm_distance_to(mapped) / dist;
    record_worst(rep, ratio, km.final_centroids.sum_norm_distance_to(mapped), dist, a, atilde);
  }
  return rep;
}

}  // namespace mssc
