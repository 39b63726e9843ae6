/**
 * \file tetra_coords.hpp
 * \brief Coordinates on the fundamental tetrahedron and sampling grids.
 *
 * Two Cartesian pictures of the homogeneous tetrahedron
 *
 *     △_H = { t : 0 <= t1-t2, t2-t3, t3-t4, t1-t4 <= 1 }
 *
 * are supported.
 *
 * - Reference tetrahedron △ (the fcc map x = from_homogeneous(t)):
 *   0 <= x2-x1, x3-x2, x1+x2, x2+x3 <= 1.
 * - Corner simplex △* with x_i = t_i - t_4: 0 <= x3 <= x2 <= x1 <= 1.
 *   Under this map the node j/4n of Λ_n sits at (k1, k2, k3)/n with
 *   k_i = (j_i - j_4)/4, so Λ_n becomes 0 <= k3 <= k2 <= k1 <= n.
 */
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcc/lattice.hpp"

namespace fcc {

struct RegularIndex {
  int k1 = 0, k2 = 0, k3 = 0;

  constexpr bool valid_for(int n) const { return 0 <= k3 && k3 <= k2 && k2 <= k1 && k1 <= n; }
  friend constexpr bool operator==(const RegularIndex&, const RegularIndex&) = default;
  friend constexpr auto operator<=>(const RegularIndex&, const RegularIndex&) = default;
};

/// k_i = (j_i - j_4) / 4.
constexpr RegularIndex index_h_to_regular(const HIndex& j) {
  return {(j[0] - j[3]) / 4, (j[1] - j[3]) / 4, (j[2] - j[3]) / 4};
}

/// Checked overload for raw quadruples; throws unless j is in H.
inline RegularIndex index_h_to_regular(const std::array<int, 4>& j) {
  return index_h_to_regular(HIndex(j));
}

/// j_4 = -(k1+k2+k3), j_i = 4 k_i + j_4.
constexpr HIndex index_regular_to_h(const RegularIndex& k) {
  const int j4 = -(k.k1 + k.k2 + k.k3);
  return {4 * k.k1 + j4, 4 * k.k2 + j4, 4 * k.k3 + j4, j4};
}

/// x_i = t_i - t_4.
constexpr Point3 homogeneous_to_regular(const HomoPoint& t) {
  return {t[0] - t[3], t[1] - t[3], t[2] - t[3]};
}

/// t_4 = -(x1+x2+x3)/4, t_i = x_i + t_4.
constexpr HomoPoint regular_to_homogeneous(const Point3& x) {
  const double t4 = -(x.x1 + x.x2 + x.x3) / 4;
  return HomoPoint::unchecked(x.x1 + t4, x.x2 + t4, x.x3 + t4, t4);
}

inline bool in_tetra_H(const HomoPoint& t, double tol = 1e-12) {
  const double d[] = {t[0] - t[1], t[1] - t[2], t[2] - t[3], t[0] - t[3]};
  for (double v : d)
    if (v < -tol || v > 1 + tol) return false;
  return true;
}

/// 0 <= x3 <= x2 <= x1 <= 1.
inline bool in_tetra_regular(const Point3& x, double tol = 1e-12) {
  return x.x3 >= -tol && x.x2 >= x.x3 - tol && x.x1 >= x.x2 - tol && x.x1 <= 1 + tol;
}

/// 0 <= x3 ± x2, x2 ± x1 <= 1.
inline bool in_reference_tetra(const Point3& x, double tol = 1e-12) {
  const double d[] = {x.x3 - x.x2, x.x3 + x.x2, x.x2 - x.x1, x.x2 + x.x1};
  for (double v : d)
    if (v < -tol || v > 1 + tol) return false;
  return true;
}

/// Grid on the closed △_H: regular coordinates (a, b, c)/(g-1), a >= b >= c >= 0.
inline std::vector<HomoPoint> tetra_grid(int points_per_axis) {
  if (points_per_axis < 2) throw std::invalid_argument("tetra_grid: need at least 2 points per axis");
  const int m = points_per_axis - 1;
  std::vector<HomoPoint> out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        out.push_back(regular_to_homogeneous({double(a) / m, double(b) / m, double(c) / m}));
  return out;
}

/**
 * Grid on the closed dodecahedron: (t1, t2, t3) on a uniform grid over
 * [-3/4, 3/4]^3, which contains the domain, filtered by membership.
 */
inline std::vector<HomoPoint> dodeca_grid(int points_per_axis) {
  if (points_per_axis < 2) throw std::invalid_argument("dodeca_grid: need at least 2 points per axis");
  const int m = points_per_axis - 1;
  std::vector<HomoPoint> out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b)
      for (int c = 0; c <= m; ++c) {
        const auto t = HomoPoint::from_three(-0.75 + 1.5 * a / m, -0.75 + 1.5 * b / m,
                                             -0.75 + 1.5 * c / m);
        if (in_closed_omega_H(t)) out.push_back(t);
      }
  return out;
}

}  // namespace fcc
