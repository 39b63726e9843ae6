// Seeded random draws shared by the test files.
#pragma once

#include <random>
#include <vector>

#include "fcc/lattice.hpp"

namespace fcc::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline HomoPoint random_point(double spread = 1.0) {
  return HomoPoint(uniform(-spread, spread), uniform(-spread, spread), uniform(-spread, spread),
                   uniform(-spread, spread));
}

/// A random element of H: j4 = -sum of reduced coordinates, j_i = 4 k'_i + j4.
inline HIndex random_index(int reach) {
  const int a = uniform_int(-reach, reach), b = uniform_int(-reach, reach), c = uniform_int(-reach, reach);
  const int j4 = -(a + b + c);
  return HIndex(4 * a + j4, 4 * b + j4, 4 * c + j4, j4);
}

/// A random element of Z^4_H (integer entries, zero sum).
inline std::array<int, 4> random_period(int reach) {
  const int a = uniform_int(-reach, reach), b = uniform_int(-reach, reach), c = uniform_int(-reach, reach);
  return {a, b, c, -(a + b + c)};
}

inline HomoPoint shift(const HomoPoint& t, const std::array<int, 4>& v) {
  return HomoPoint::unchecked(t[0] + v[0], t[1] + v[1], t[2] + v[2], t[3] + v[3]);
}

}  // namespace fcc::test
