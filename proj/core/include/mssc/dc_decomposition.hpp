#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mssc/centroid_system.hpp"
#include "mssc/dataset.hpp"

namespace mssc {

// Convex split f = f1 - f2 of the clustering objective.
// f1(x) = (1/m) sum_i sum_j ||a_i - x_j||^2
// f2(x) = (1/m) sum_i max_j sum_{q != j} ||a_i - x_q||^2
// f2 is evaluated literally (inner sums spelled out), so the identity
// f1 - f2 = f is a genuine floating-point check rather than a tautology.
double f1(const DataSet& data, const CentroidSystem& x);
double f2(const DataSet& data, const CentroidSystem& x);

// Gradient of f1, the block vector 2(x_1 - a_0, ..., x_k - a_0) flattened
// slot-major into R^{n*k}.
std::vector<double> grad_f1(const DataSet& data, const CentroidSystem& x);

// Generators of the subdifferential of phi_i at x: one vector
// 2(xtilde_j - atilde_ij) in R^{n*k} per j in J_i(x), where xtilde_j is x
// with slot j zeroed and atilde_ij repeats a_i in every slot except j.
// The subdifferential is the convex hull of the generators; it is a
// singleton iff the generators are pairwise equal.
struct SubdiffGenerators {
  std::size_t point_index = 0;
  std::size_t slot_width = 0;                     // n, for the flat layout
  std::vector<std::size_t> nearest_slots;         // J_i(x)
  std::vector<std::vector<double>> generators;    // flattened, slot-major

  // Pairwise equality in the sum norm of R^{n x k} at tolerance tol_abs.
  bool singleton(double tol_abs) const;
};

SubdiffGenerators subdiff_phi(const DataSet& data, const CentroidSystem& x, std::size_t i,
                              double eps_tie = kDefaultEpsTie);

// DC necessary optimality: subdiff(f2) inside subdiff(f1). Since the f1
// side is the singleton {grad f1}, the condition reduces to every
// subdiff_phi generator set being a singleton. On failure, witness is
// the least violating data index (0-based).
struct DcCheckResult {
  bool holds = false;
  std::optional<std::size_t> witness;
};

DcCheckResult dc_optimality_check(const DataSet& data, const CentroidSystem& x,
                                  double eps_tie = kDefaultEpsTie);

}  // namespace mssc
