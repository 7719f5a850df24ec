#pragma once

#include <cstddef>
#include <vector>

#include "mssc/centroid_system.hpp"
#include "mssc/dataset.hpp"

namespace mssc {

// J_i(x): indices of the centroids nearest to data point a_i, with ties
// detected at eps_tie * scale in the plain (non-squared) distance.
// Never empty.
std::vector<std::size_t> nearest_index_set(const DataSet& data, const CentroidSystem& x,
                                           std::size_t i, double eps_tie = kDefaultEpsTie);

// Attraction set of slot j: the data indices whose nearest-centroid set
// contains j. May be empty.
std::vector<std::size_t> attraction_set(const DataSet& data, const CentroidSystem& x,
                                        std::size_t j, double eps_tie = kDefaultEpsTie);

// All k attraction sets in one scan (they may overlap at ties).
std::vector<std::vector<std::size_t>> attraction_sets(const DataSet& data,
                                                      const CentroidSystem& x,
                                                      double eps_tie = kDefaultEpsTie);

}  // namespace mssc
