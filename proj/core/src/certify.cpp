#include "mssc/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mssc/attraction.hpp"
#include "mssc/error.hpp"
#include "mssc/objective.hpp"
#include "mssc/oracle.hpp"

namespace mssc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double min_pairwise_gap(const CentroidSystem& x) {
  double gap = kInf;
  for (std::size_t j1 = 0; j1 + 1 < x.count(); ++j1) {
    for (std::size_t j2 = j1 + 1; j2 < x.count(); ++j2) {
      gap = std::min(gap, distance(x.centroid(j1), x.centroid(j2)));
    }
  }
  return gap;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NontrivialLocal: return "NontrivialLocal";
    case Verdict::Global: return "Global";
    case Verdict::LocalNonGlobal: return "LocalNonGlobal";
    case Verdict::NotLocal: return "NotLocal";
    case Verdict::TrivialIndeterminate: return "TrivialIndeterminate";
  }
  return "Unknown";
}

bool check_c1(const CentroidSystem& x, double tol_abs) {
  return min_pairwise_gap(x) > tol_abs;
}

bool check_c1(const DataSet& data, const CentroidSystem& x, double eps_tie) {
  return check_c1(x, eps_tie * data.scale());
}

std::vector<std::size_t> canonical_permutation(const CentroidSystem& x) {
  std::vector<std::size_t> perm(x.count());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&x](std::size_t a, std::size_t b) {
    return lex_less(x.centroid(a), x.centroid(b));
  });
  return perm;
}

CentroidSystem canonicalize(const CentroidSystem& x) {
  const std::vector<std::size_t> perm = canonical_permutation(x);
  std::vector<Vec> sorted;
  sorted.reserve(x.count());
  for (std::size_t j : perm) sorted.push_back(x.centroid(j));
  return CentroidSystem::from_centroids(std::move(sorted));
}

bool equal_mod_permutation(const CentroidSystem& a, const CentroidSystem& b, double tol_abs) {
  if (a.count() != b.count() || a.dim() != b.dim()) return false;
  const CentroidSystem ca = canonicalize(a);
  const CentroidSystem cb = canonicalize(b);
  for (std::size_t j = 0; j < ca.count(); ++j) {
    for (std::size_t c = 0; c < ca.dim(); ++c) {
      if (std::fabs(ca.centroid(j)[c] - cb.centroid(j)[c]) > tol_abs) return false;
    }
  }
  return true;
}

CertificationReport certify_nontrivial_local(const DataSet& data, const CentroidSystem& x_in,
                                             const CertifyOptions& opts) {
  require_same_dim(data, x_in);
  const double tie_tol = opts.eps_tie * data.scale();
  const double bary_tol = opts.eps_bary * data.scale();

  // All slot-indexed findings refer to the canonical order.
  const CentroidSystem x = canonicalize(x_in);

  CertificationReport rep;
  rep.centroids = x;
  rep.objective = objective_f(data, x);
  rep.duplicated_data_warning = !data.pairwise_distinct();

  rep.c1_min_gap = min_pairwise_gap(x);
  rep.c1_holds = rep.c1_min_gap > tie_tol;

  // Singleton nearest-index sets, plus the slack between the nearest and
  // second-nearest centroid per point.
  rep.singleton_ji = true;
  rep.ji_min_slack = kInf;
  std::vector<std::vector<std::size_t>> nearest(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    nearest[i] = nearest_index_set(data, x, i, opts.eps_tie);
    if (nearest[i].size() != 1 && rep.singleton_ji) {
      rep.singleton_ji = false;
      rep.ji_witness = i;
    }
    if (x.count() >= 2) {
      double d1 = kInf, d2 = kInf;
      for (std::size_t j = 0; j < x.count(); ++j) {
        const double d = distance(data.point(i), x.centroid(j));
        if (d < d1) {
          d2 = d1;
          d1 = d;
        } else {
          d2 = std::min(d2, d);
        }
      }
      rep.ji_min_slack = std::min(rep.ji_min_slack, d2 - d1);
    }
  }

  // Attraction sets I(j) (they overlap only at ties, which the singleton
  // check already flags).
  std::vector<std::vector<std::size_t>> attracted(x.count());
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j : nearest[i]) attracted[j].push_back(i);
  }

  // Barycenter formula on every attractive slot.
  rep.barycenter_ok = true;
  rep.barycenter_residuals.assign(x.count(), std::nullopt);
  for (std::size_t j = 0; j < x.count(); ++j) {
    if (attracted[j].empty()) continue;
    const double residual = distance(x.centroid(j), barycenter(data, attracted[j]));
    rep.barycenter_residuals[j] = residual;
    if (residual > bary_tol && rep.barycenter_ok) {
      rep.barycenter_ok = false;
      rep.barycenter_witness = j;  // slots ascend, so this is the least violator
    }
  }

  // Exclusion region for non-attractive slots: x_j must lie strictly
  // outside every ball centered at an attracted point a_p with radius
  // the distance from a_p to its own centroid x_q.
  rep.exclusion_ok = true;
  double min_margin = kInf;
  for (std::size_t j = 0; j < x.count(); ++j) {
    if (!attracted[j].empty()) continue;
    for (std::size_t q = 0; q < x.count(); ++q) {
      if (q == j) continue;
      for (std::size_t p : attracted[q]) {
        const double margin =
            distance(data.point(p), x.centroid(j)) - distance(data.point(p), x.centroid(q));
        rep.exclusion_margins.push_back(ExclusionMargin{j, p, q, margin});
        min_margin = std::min(min_margin, margin);
        if (margin <= tie_tol && rep.exclusion_ok) {
          rep.exclusion_ok = false;
          rep.exclusion_witness = ExclusionMargin{j, p, q, margin};
        }
      }
    }
  }

  rep.strict_slack = std::min({rep.c1_min_gap, rep.ji_min_slack, min_margin});

  if (!rep.c1_holds) {
    rep.verdict = Verdict::TrivialIndeterminate;
  } else if (rep.singleton_ji && rep.barycenter_ok && rep.exclusion_ok) {
    rep.verdict = Verdict::NontrivialLocal;
  } else {
    rep.verdict = Verdict::NotLocal;
  }
  return rep;
}

CertificationReport classify(const DataSet& data, const CentroidSystem& x, bool run_oracle,
                             const CertifyOptions& opts, std::uint64_t candidate_budget) {
  CertificationReport rep = certify_nontrivial_local(data, x, opts);
  if (!run_oracle) return rep;

  GlobalSolveResult solved;
  try {
    solved = global_solve(data, x.count(), candidate_budget, opts.eps_tie);
  } catch (const refusal_error& e) {
    rep.oracle_note = e.what();
    return rep;
  }
  rep.oracle_ran = true;
  rep.optimal_value = solved.optimal_value;
  rep.optimal_value_gap = rep.objective - solved.optimal_value;
  if (rep.verdict == Verdict::NontrivialLocal) {
    const double tol = kGlobalGapRelTol * data.scale() * data.scale();
    rep.verdict = (*rep.optimal_value_gap <= tol) ? Verdict::Global : Verdict::LocalNonGlobal;
  }
  return rep;
}

}  // namespace mssc
