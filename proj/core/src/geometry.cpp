#include "mssc/geometry.hpp"

#include <cassert>
#include <cmath>

namespace mssc {

double squared_distance(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double d = a[c] - b[c];
    s += d * d;
  }
  return s;
}

double distance(const Vec& a, const Vec& b) { return std::sqrt(squared_distance(a, b)); }

double norm(const Vec& a) {
  double s = 0.0;
  for (double c : a) s += c * c;
  return std::sqrt(s);
}

double sum_norm_distance(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += distance(a[i], b[i]);
  return s;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t c = 0; c < a.size() && c < b.size(); ++c) {
    if (a[c] < b[c]) return true;
    if (a[c] > b[c]) return false;
  }
  return a.size() < b.size();
}

}  // namespace mssc
