#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mssc/centroid_system.hpp"
#include "mssc/certify.hpp"
#include "mssc/dataset.hpp"
#include "mssc/oracle.hpp"

namespace mssc {

// Deterministic per-trial stream: the same (seed, stream) pair always
// yields the same generator, so trials are schedule-independent.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t stream);

// Data perturbation: isotropic Gaussian direction over the stacked
// points, rescaled so the sum-norm radius is uniform in (0, delta).
// Pairwise distinctness is preserved by resampling, with refusal after
// 100 failed draws (delta too large for the data separation).
DataSet perturb(const DataSet& data, double delta, std::mt19937_64& rng);
DataSet perturb(const DataSet& data, double delta, std::uint64_t seed);

// 0.01 times the minimal pairwise data distance: small enough to keep
// perturbed data distinct and certificates' strict inequalities alive.
double default_probe_delta(const DataSet& data);

enum class ProbeKind { ValueLipschitz, GlobalUpperLipschitz, AubinLocal };
std::string probe_kind_name(ProbeKind kind);

// Empirical stability measurement. max_ratio is the largest observed
// quotient (value change, solution displacement, or constructed-point
// displacement over data displacement); it is the estimate of the
// theorem's constant, so the Lipschitz-style inclusion at max_ratio
// holds for every trial by construction. violations counts structural
// failures: a perturbed optimal value escaping the recorded candidate
// formula, or a constructed point failing certification.
struct StabilityProbeReport {
  ProbeKind kind = ProbeKind::ValueLipschitz;
  std::size_t trials = 0;
  double delta = 0.0;
  double max_ratio = 0.0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  // near-zero data displacement, ratio undefined

  // The pair of perturbed data stacks achieving max_ratio.
  std::vector<Vec> worst_first;
  std::vector<Vec> worst_second;
  double worst_numerator = 0.0;
  double worst_denominator = 0.0;

  std::size_t reference_count = 0;  // solutions (or partitions) recorded at the base data

  // Aubin probe bookkeeping.
  std::size_t constructed_points = 0;
  std::size_t certified_points = 0;

  // Global-map probe: reference solution nearest to the worst case.
  std::optional<std::size_t> worst_matched_reference;

  // Norm convention, stated in every serialized report.
  std::string norm =
      "sum norm: sum over points (slots) of per-point Euclidean norms";
};

// Local Lipschitz continuity of the optimal value: samples pairs of
// perturbed data sets, measures |v(a) - v(a')| / ||a - a'||, and checks
// that v at each perturbation is still attained on the argmin partition
// set recorded at the base data.
StabilityProbeReport probe_value_lipschitz(const DataSet& data0, std::size_t k, double delta,
                                           std::size_t trials, std::uint64_t seed,
                                           std::uint64_t budget = kDefaultCandidateBudget);

// Local upper Lipschitz continuity of the global solution map: for each
// perturbation, every perturbed global solution is matched to the
// nearest base solution modulo slot permutation.
StabilityProbeReport probe_global_upper_lipschitz(const DataSet& data0, std::size_t k,
                                                  double delta, std::size_t trials,
                                                  std::uint64_t seed,
                                                  std::uint64_t budget = kDefaultCandidateBudget);

struct AubinOptions {
  // Admission radius around xbar for k-means-found members; infinity
  // admits every converged fixed point.
  double eps = std::numeric_limits<double>::infinity();
  // Also probe local solutions found by running k-means from xbar at the
  // perturbed data, not just the constructive candidate.
  bool include_kmeans_members = true;
  CertifyOptions certify;
};

// Aubin property of the local solution map at (data0, xbar): per trial,
// builds the constructive local solution at two perturbed data sets by
// re-averaging over xbar's fixed attraction sets (non-attractive slots
// stay put), certifies both, and measures their displacement ratio.
// xbar must certify NontrivialLocal at data0.
StabilityProbeReport probe_aubin_local(const DataSet& data0, const CentroidSystem& xbar,
                                       double delta1, std::size_t trials, std::uint64_t seed,
                                       const AubinOptions& options = {});

}  // namespace mssc
