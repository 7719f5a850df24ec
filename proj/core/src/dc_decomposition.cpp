#include "mssc/dc_decomposition.hpp"

#include <cmath>
#include <limits>

#include "mssc/attraction.hpp"
#include "mssc/error.hpp"
#include "mssc/objective.hpp"

namespace mssc {

double f1(const DataSet& data, const CentroidSystem& x) {
  require_same_dim(data, x);
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < x.count(); ++j) {
      total += squared_distance(data.point(i), x.centroid(j));
    }
  }
  return total / static_cast<double>(data.size());
}

double f2(const DataSet& data, const CentroidSystem& x) {
  require_same_dim(data, x);
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    // max over j of the sum with slot j left out; for k = 1 the inner
    // sum is empty and the max is 0.
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < x.count(); ++j) {
      double s = 0.0;
      for (std::size_t q = 0; q < x.count(); ++q) {
        if (q == j) continue;
        s += squared_distance(data.point(i), x.centroid(q));
      }
      best = std::max(best, s);
    }
    total += best;
  }
  return total / static_cast<double>(data.size());
}

std::vector<double> grad_f1(const DataSet& data, const CentroidSystem& x) {
  require_same_dim(data, x);
  const Vec a0 = data_barycenter(data);
  std::vector<double> g(x.count() * x.dim());
  for (std::size_t j = 0; j < x.count(); ++j) {
    for (std::size_t c = 0; c < x.dim(); ++c) {
      g[j * x.dim() + c] = 2.0 * (x.centroid(j)[c] - a0[c]);
    }
  }
  return g;
}

bool SubdiffGenerators::singleton(double tol_abs) const {
  for (std::size_t a = 0; a + 1 < generators.size(); ++a) {
    for (std::size_t b = a + 1; b < generators.size(); ++b) {
      // Sum norm over the k slots of R^{n x k}.
      double diff = 0.0;
      for (std::size_t offset = 0; offset < generators[a].size(); offset += slot_width) {
        double acc = 0.0;
        for (std::size_t c = offset; c < offset + slot_width; ++c) {
          const double d = generators[a][c] - generators[b][c];
          acc += d * d;
        }
        diff += std::sqrt(acc);
      }
      if (diff > tol_abs) return false;
    }
  }
  return true;
}

SubdiffGenerators subdiff_phi(const DataSet& data, const CentroidSystem& x, std::size_t i,
                              double eps_tie) {
  require_same_dim(data, x);
  if (i >= data.size()) throw input_error("data index out of range");

  SubdiffGenerators out;
  out.point_index = i;
  out.slot_width = x.dim();
  out.nearest_slots = nearest_index_set(data, x, i, eps_tie);
  const std::size_t n = x.dim();
  const std::size_t k = x.count();
  const Vec& a = data.point(i);
  for (std::size_t j : out.nearest_slots) {
    std::vector<double> g(n * k, 0.0);
    for (std::size_t q = 0; q < k; ++q) {
      if (q == j) continue;  // slot j of both block vectors is zero
      for (std::size_t c = 0; c < n; ++c) {
        g[q * n + c] = 2.0 * (x.centroid(q)[c] - a[c]);
      }
    }
    out.generators.push_back(std::move(g));
  }
  return out;
}

DcCheckResult dc_optimality_check(const DataSet& data, const CentroidSystem& x, double eps_tie) {
  require_same_dim(data, x);
  const double tol = eps_tie * data.scale();
  for (std::size_t i = 0; i < data.size(); ++i) {
    const SubdiffGenerators gen = subdiff_phi(data, x, i, eps_tie);
    if (!gen.singleton(tol)) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace mssc
