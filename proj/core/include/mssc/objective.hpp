#pragma once

#include <cstddef>
#include <vector>

#include "mssc/assignment.hpp"
#include "mssc/centroid_system.hpp"
#include "mssc/dataset.hpp"

namespace mssc {

// f(x) = (1/m) sum_i min_j ||a_i - x_j||^2.
double objective_f(const DataSet& data, const CentroidSystem& x);

// psi(x, alpha) = (1/m) sum_i sum_j alpha_ij ||a_i - x_j||^2.
// psi >= f for every valid alpha, with equality at the natural assignment.
double objective_psi(const DataSet& data, const CentroidSystem& x, const Assignment& alpha);

// (1/|idx|) sum_{i in idx} a_i. Throws input_error on an empty index set;
// callers dealing with possibly-empty clusters must branch first.
Vec barycenter(const DataSet& data, const std::vector<std::size_t>& idx);

// Barycenter of the whole data set (a_0).
Vec data_barycenter(const DataSet& data);

// Shared precondition: every centroid must live in the data's space.
void require_same_dim(const DataSet& data, const CentroidSystem& x);

}  // namespace mssc
