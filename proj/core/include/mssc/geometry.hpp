#pragma once

#include <cstddef>
#include <vector>

namespace mssc {

// A point in R^n.
using Vec = std::vector<double>;

// Comparisons between candidate centroids use plain Euclidean norms;
// objectives use squares. Keeping the two roles separate avoids
// double-rounding asymmetry between tie tests and objective values.
double squared_distance(const Vec& a, const Vec& b);
double distance(const Vec& a, const Vec& b);
double norm(const Vec& a);

// Sum norm on a stacked family of points: sum_i ||a_i - b_i||.
// This is the product-space norm used for data perturbations and for
// distances between centroid systems.
double sum_norm_distance(const std::vector<Vec>& a, const std::vector<Vec>& b);

// Lexicographic order on coordinate tuples.
bool lex_less(const Vec& a, const Vec& b);

}  // namespace mssc
