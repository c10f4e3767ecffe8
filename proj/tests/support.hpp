#pragma once

// Shared test helpers: seeded random data and brute-force oracles that do not
// go through the library code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "circinterp/laurent.hpp"

namespace testsupport {

using circinterp::Complex;
using circinterp::kPi;
using circinterp::kTwoPi;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline double uniform(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng());
}

inline Complex random_complex() {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng()), g(rng())};
}

inline Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// n unimodular points, angles jittered from the uniform grid so that the
/// minimum separation stays around pi/n.
inline std::vector<Complex> jittered_nodes(int n, double jitter = 0.3) {
  std::vector<Complex> z;
  const double h = kTwoPi / n;
  for (int k = 0; k < n; ++k) z.push_back(unit(h * (k + uniform(-jitter, jitter))));
  return z;
}

/// Direct O(n) product formula for the fundamental polynomial
/// l_j(z) = (z_j / z)^p prod_{k != j} (z - z_k)/(z_j - z_k).
inline Complex direct_fundamental(const std::vector<Complex>& nodes, int p, std::size_t j, Complex z) {
  Complex v = std::pow(nodes[j] / z, p);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k != j) v *= (z - nodes[k]) / (nodes[j] - nodes[k]);
  }
  return v;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testsupport
