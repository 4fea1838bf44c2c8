#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "feynman/graph.hpp"

namespace testing_support {

// Frozen 40-digit reference values (mpmath, independent of this code base).
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta5 = 1.0369277551433699263;
inline constexpr double kZeta35 = 0.037707672984847544011;
inline constexpr double kZeta23 = 0.22881039760335375977;
inline constexpr double kZeta32 = 0.71156619755057243210;
inline constexpr double kZeta22 = 0.81174242528335364364;
inline constexpr double kGMinus2 = -0.32847896557919378458;
inline constexpr double kP35 = 2.2345650561425603133;
inline constexpr double kSixZeta3 = 7.2123414189575657124;
inline constexpr double kTwentyZeta5 = 20.738555102867398527;

// Kirchhoff: number of spanning trees as a cofactor of the integer
// Laplacian, by Bareiss elimination. Self-loops do not contribute.
inline boost::multiprecision::cpp_int spanning_tree_count(const feynman::FeynmanGraph& g) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = g.num_vertices();
  if (n == 1) return 1;
  std::vector<std::vector<cpp_int>> lap(n, std::vector<cpp_int>(n, 0));
  for (const auto& e : g.edges()) {
    const auto [a, b] = e.ends;
    if (a == b) continue;
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  const std::size_t m = n - 1;
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = lap[i][j];
  }
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

// Brute force sum_{0<k<l<=L} 1/(k^a l^b) plus a bracket for the tail l > L.
// Returns the midpoint of [lower, upper]; *half_width receives the bracket half-width.
inline double depth2_brute_force(unsigned a, unsigned b, unsigned long cutoff, double* half_width) {
  long double harmonic = 0.0L;  // H_{l-1}^{(a)}
  long double sum = 0.0L;
  for (unsigned long l = 1; l <= cutoff; ++l) {
    sum += harmonic / std::pow(static_cast<long double>(l), b);
    harmonic += 1.0L / std::pow(static_cast<long double>(l), a);
  }
  // sum_{l>L} 1/l^b lies between the integrals from L+1 and from L.
  const long double lo_tail = 1.0L / ((b - 1) * std::pow(static_cast<long double>(cutoff + 1), b - 1));
  const long double hi_tail = 1.0L / ((b - 1) * std::pow(static_cast<long double>(cutoff), b - 1));
  // For l > L, H_{l-1}^{(a)} lies in [H_L^{(a)}, zeta(a)], and zeta(a) <= H_L + 1/((a-1) L^{a-1}). Needs a >= 2.
  const long double zeta_a_upper = harmonic + 1.0L / ((a - 1) * std::pow(static_cast<long double>(cutoff), a - 1));
  const long double lower = sum + harmonic * lo_tail;
  const long double upper = sum + zeta_a_upper * hi_tail;
  *half_width = static_cast<double>((upper - lower) / 2);
  return static_cast<double>((upper + lower) / 2);
}

}  // namespace testing_support
