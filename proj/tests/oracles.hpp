// Independent reference computations for the unit and acceptance tests.
// They work on integer lattice indices and closed-form memberships, never on
// the library's evaluation paths.
#ifndef FTVS_TESTS_ORACLES_HPP
#define FTVS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

// The 41-point lattice on [-5, 5] with step 1/4: index i <-> -5 + i/4.
inline constexpr int kPoints = 41;
inline constexpr int kCenter = 20;
inline double coord(int i) { return -5.0 + 0.25 * i; }

using Values = std::vector<double>;

// sup over lattice decompositions x = x1 + x2 of min(a(x1), b(x2)); parts
// that leave the box contribute 0.
inline Values sup_min_sum(const Values& a, const Values& b) {
  Values out(kPoints, 0.0);
  for (int i = 0; i < kPoints; ++i) {
    for (int j = 0; j < kPoints; ++j) {
      const int k = i - j + kCenter;
      if (k < 0 || k >= kPoints) continue;
      out[i] = std::max(out[i], std::min(a[j], b[k]));
    }
  }
  return out;
}

// Image under x -> slope*x + shift with integer slope and shift a multiple of
// 1/4, so every image lands exactly on a lattice index or leaves the box.
inline Values image_integer_affine(const Values& a, int slope, int shift_quarters) {
  Values out(kPoints, 0.0);
  for (int j = 0; j < kPoints; ++j) {
    const int k = slope * (j - kCenter) + kCenter + shift_quarters;
    if (k < 0 || k >= kPoints) continue;
    out[k] = std::max(out[k], a[j]);
  }
  return out;
}

inline double triangular(double a, double b, double c, double t) {
  if (t == b) return 1.0;
  if (t > a && t < b) return (t - a) / (b - a);
  if (t > b && t < c) return (c - t) / (c - b);
  return 0.0;
}

inline double euclidean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace oracle

#endif  // FTVS_TESTS_ORACLES_HPP
