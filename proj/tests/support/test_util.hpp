#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "mssc/attraction.hpp"
#include "mssc/centroid_system.hpp"
#include "mssc/dataset.hpp"
#include "mssc/objective.hpp"

namespace mssc::test {

// The worked three-point instance: a1=(0,0), a2=(1,0), a3=(0,1).
inline DataSet tri() {
  return DataSet::from_points({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
}

inline CentroidSystem sys(std::vector<Vec> centroids) {
  return CentroidSystem::from_centroids(std::move(centroids));
}

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

// Points i.i.d. uniform in [lo,hi]^n, redrawn until pairwise distinct.
inline DataSet random_data(std::size_t m, std::size_t n, std::mt19937_64& rng, double lo = 0.0,
                           double hi = 1.0) {
  for (;;) {
    std::vector<Vec> pts(m, Vec(n));
    for (Vec& p : pts) {
      for (double& c : p) c = urand(rng, lo, hi);
    }
    DataSet d = DataSet::from_points(std::move(pts));
    if (d.pairwise_distinct()) return d;
  }
}

inline CentroidSystem random_system(std::size_t k, std::size_t n, std::mt19937_64& rng,
                                    double lo = -0.5, double hi = 1.5) {
  std::vector<Vec> cents(k, Vec(n));
  for (Vec& c : cents) {
    for (double& v : c) v = urand(rng, lo, hi);
  }
  return CentroidSystem::from_centroids(std::move(cents));
}

// Independent direct evaluation of the clustering objective: plain
// nested loops over raw coordinate vectors, no library calls.
inline double direct_f(const std::vector<Vec>& pts, const std::vector<Vec>& cents) {
  double total = 0.0;
  for (const Vec& a : pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& c : cents) {
      double d2 = 0.0;
      for (std::size_t q = 0; q < a.size(); ++q) d2 += (a[q] - c[q]) * (a[q] - c[q]);
      best = std::min(best, d2);
    }
    total += best;
  }
  return total / static_cast<double>(pts.size());
}

// Random direction in the stacked centroid space, unit sum norm.
inline std::vector<Vec> random_direction(std::size_t k, std::size_t n, std::mt19937_64& rng) {
  std::vector<Vec> dir(k, Vec(n));
  double total = 0.0;
  for (Vec& slot : dir) {
    double norm_sq = 0.0;
    for (double& c : slot) {
      // Box-Muller
      const double u1 = 1.0 - urand(rng, 0.0, 1.0);
      const double u2 = urand(rng, 0.0, 1.0);
      c = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
      norm_sq += c * c;
    }
    total += std::sqrt(norm_sq);
  }
  if (total == 0.0) return random_direction(k, n, rng);
  for (Vec& slot : dir) {
    for (double& c : slot) c /= total;
  }
  return dir;
}

inline CentroidSystem shifted(const CentroidSystem& x, const std::vector<Vec>& dir,
                              double step) {
  std::vector<Vec> cents = x.centroids();
  for (std::size_t j = 0; j < cents.size(); ++j) {
    for (std::size_t c = 0; c < cents[j].size(); ++c) cents[j][c] += step * dir[j][c];
  }
  return CentroidSystem::from_centroids(std::move(cents));
}

// Samples perturbations of x with sum norm below radius and reports the
// largest objective decrease observed (positive = descent found).
inline double max_descent_under_perturbation(const DataSet& data, const CentroidSystem& x,
                                             double radius, std::size_t samples,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double fx = objective_f(data, x);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto dir = random_direction(x.count(), x.dim(), rng);
    const double r = urand(rng, 0.0, 1.0) * radius;
    worst = std::max(worst, fx - objective_f(data, shifted(x, dir, r)));
  }
  return worst;
}

// Looks for a strict descent point within the given radius: random
// directions plus the analytic ones (each slot moved toward the
// barycenter of its current attraction set).
inline bool find_descent_point(const DataSet& data, const CentroidSystem& x, double radius,
                               std::size_t samples, std::uint64_t seed) {
  const double fx = objective_f(data, x);
  const double margin = 1e-14 * data.scale() * data.scale();
  const auto improves = [&](const CentroidSystem& y) {
    return objective_f(data, y) < fx - margin;
  };

  for (std::size_t j = 0; j < x.count(); ++j) {
    const auto attracted = attraction_set(data, x, j);
    if (attracted.empty()) continue;
    const Vec target = barycenter(data, attracted);
    const double dist = distance(target, x.centroid(j));
    if (dist == 0.0) continue;
    for (double step : {1.0, 0.5, 0.1, 0.01}) {
      const double len = std::min(radius, dist) * step;
      Vec moved = x.centroid(j);
      for (std::size_t c = 0; c < moved.size(); ++c) {
        moved[c] += len * (target[c] - x.centroid(j)[c]) / dist;
      }
      if (improves(x.with_centroid(j, moved))) return true;
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto dir = random_direction(x.count(), x.dim(), rng);
    for (double step : {radius, radius * 1e-2}) {
      if (improves(shifted(x, dir, step))) return true;
      if (improves(shifted(x, dir, -step))) return true;
    }
  }
  return false;
}

}  // namespace mssc::test
