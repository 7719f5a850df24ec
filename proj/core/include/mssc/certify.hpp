#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mssc/centroid_system.hpp"
#include "mssc/dataset.hpp"

namespace mssc {

// Relative tolerance on f(x) - v(a) below which a certified local
// solution is classified as global.
inline constexpr double kGlobalGapRelTol = 1e-9;

enum class Verdict {
  NontrivialLocal,       // all characterization conditions hold
  Global,                // NontrivialLocal and f(x) matches the optimal value
  LocalNonGlobal,        // NontrivialLocal but f(x) above the optimal value
  NotLocal,              // distinct components, but some condition fails
  TrivialIndeterminate,  // duplicated components: outside the theory's scope
};

std::string verdict_name(Verdict v);

struct CertifyOptions {
  double eps_tie = kDefaultEpsTie;  // distance-tie tolerance (relative)
  double eps_bary = 1e-9;           // barycenter residual tolerance (relative)
};

// One exclusion-region inequality: for an empty-attraction slot j and a
// point p attracted to slot q, requires ||a_p - x_j|| > ||a_p - x_q||.
// margin is the left side minus the right side. All indices 0-based.
struct ExclusionMargin {
  std::size_t slot_j = 0;
  std::size_t point_p = 0;
  std::size_t slot_q = 0;
  double margin = 0.0;
};

// The certificate: every condition of the local-solution
// characterization with its witnesses. Slot indices refer to the
// canonicalized system stored in `centroids`; data indices are 0-based
// positions in the input data set.
struct CertificationReport {
  Verdict verdict = Verdict::TrivialIndeterminate;
  std::optional<CentroidSystem> centroids;  // canonical form of the certified system
  double objective = 0.0;                   // f(x)

  bool c1_holds = false;       // components pairwise distinct
  double c1_min_gap = 0.0;     // min pairwise centroid distance (+inf when k = 1)

  bool singleton_ji = false;   // |J_i(x)| = 1 for every i
  std::optional<std::size_t> ji_witness;  // least i with |J_i| > 1
  double ji_min_slack = 0.0;   // min over i of (2nd nearest - nearest), +inf when k = 1

  bool barycenter_ok = false;
  // Residual ||x_j - barycenter(I(j))|| per slot; empty-attraction slots
  // carry no residual.
  std::vector<std::optional<double>> barycenter_residuals;
  std::optional<std::size_t> barycenter_witness;  // least violating slot

  bool exclusion_ok = false;
  std::vector<ExclusionMargin> exclusion_margins;  // all (j, p, q) with I(j) empty
  std::optional<ExclusionMargin> exclusion_witness;

  // Least slack over every strict inequality in the certificate: the C1
  // gaps, the J_i gaps, and the exclusion margins. Perturbations smaller
  // than half this slack cannot change the active geometry.
  double strict_slack = 0.0;

  bool duplicated_data_warning = false;

  // Filled by classify when the exact oracle ran.
  bool oracle_ran = false;
  std::optional<double> optimal_value;      // v(a)
  std::optional<double> optimal_value_gap;  // f(x) - v(a)
  std::string oracle_note;                  // nonempty when the oracle was skipped
};

// Condition (C1): centroids pairwise distinct beyond the absolute
// tolerance tol_abs.
bool check_c1(const CentroidSystem& x, double tol_abs);
// Convenience overload using the data's tie tolerance.
bool check_c1(const DataSet& data, const CentroidSystem& x, double eps_tie = kDefaultEpsTie);

// Slots sorted lexicographically by coordinates. The objective is
// invariant under this reordering.
CentroidSystem canonicalize(const CentroidSystem& x);
// Permutation p with canonicalize(x).centroid(r) == x.centroid(p[r]).
std::vector<std::size_t> canonical_permutation(const CentroidSystem& x);
// Equality modulo slot permutation: canonical forms match within
// tol_abs per coordinate.
bool equal_mod_permutation(const CentroidSystem& a, const CentroidSystem& b, double tol_abs);

// Decides nontrivial local optimality by the complete characterization:
// (C1), singleton nearest-index sets, the barycenter formula on every
// attractive slot, and strict exteriority of every non-attractive slot
// to the union of balls around attracted points. The same predicate is
// necessary and sufficient, so one evaluation yields both directions.
CertificationReport certify_nontrivial_local(const DataSet& data, const CentroidSystem& x,
                                             const CertifyOptions& opts = {});

// certify_nontrivial_local plus, when run_oracle is set, refinement
// against the exact optimal value: NontrivialLocal upgrades to Global or
// LocalNonGlobal. Oracle refusals (budget, duplicated data) leave the
// verdict unrefined and are noted in the report instead of thrown.
CertificationReport classify(const DataSet& data, const CentroidSystem& x, bool run_oracle,
                             const CertifyOptions& opts = {},
                             std::uint64_t candidate_budget = 10'000'000);

}  // namespace mssc
