/**
 * \file lattice.hpp
 * \brief Homogeneous coordinates for the face-centered cubic lattice.
 *
 * A point x of R^3 is represented by four coordinates t = U x that sum to
 * zero.  In these coordinates the fcc lattice becomes Z^4_H, the integer
 * zero-sum vectors, and the rhombic dodecahedron becomes
 *
 *     Omega_H = { t : -1 < t_i - t_j <= 1, 1 <= i < j <= 4 }.
 *
 * Frequencies live in H, the zero-sum integer vectors whose entries are
 * mutually congruent mod 4, and phi_k(t) = exp(i pi/2 k.t) is H-periodic.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fcc {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Cartesian point of R^3.
struct Point3 {
  double x1 = 0, x2 = 0, x3 = 0;

  constexpr double operator[](std::size_t i) const {
    return i == 0 ? x1 : (i == 1 ? x2 : x3);
  }
  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

/**
 * \brief A point of R^4_H.
 *
 * The constructor projects onto the zero-sum hyperplane by subtracting the
 * coordinate mean, so every HomoPoint satisfies sum(t) = 0 up to rounding.
 */
class HomoPoint {
 public:
  constexpr HomoPoint() = default;
  constexpr HomoPoint(double t1, double t2, double t3, double t4)
      : t_{t1, t2, t3, t4} {
    const double mean = (t1 + t2 + t3 + t4) / 4;
    if (mean != 0)
      for (double& v : t_) v -= mean;
  }
  explicit constexpr HomoPoint(const std::array<double, 4>& t)
      : HomoPoint(t[0], t[1], t[2], t[3]) {}

  /// From the first three coordinates, t4 = -(t1+t2+t3).
  static constexpr HomoPoint from_three(double t1, double t2, double t3) {
    HomoPoint p;
    p.t_ = {t1, t2, t3, -(t1 + t2 + t3)};
    return p;
  }

  /// Stores the coordinates as given; the caller guarantees a zero sum.
  static constexpr HomoPoint unchecked(double t1, double t2, double t3, double t4) {
    HomoPoint p;
    p.t_ = {t1, t2, t3, t4};
    return p;
  }

  constexpr double operator[](std::size_t i) const { return t_[i]; }
  constexpr const std::array<double, 4>& coords() const { return t_; }

  friend constexpr HomoPoint operator+(const HomoPoint& a, const HomoPoint& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
  }
  friend constexpr HomoPoint operator-(const HomoPoint& a, const HomoPoint& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
  }
  friend constexpr HomoPoint operator*(double s, const HomoPoint& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
  }
  friend constexpr bool operator==(const HomoPoint&, const HomoPoint&) = default;

 private:
  std::array<double, 4> t_{0, 0, 0, 0};
};

/// Max-norm distance between two homogeneous points.
inline double distance(const HomoPoint& a, const HomoPoint& b) {
  double d = 0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

/// True iff k is zero-sum with all entries congruent mod 4.
constexpr bool is_h_index(const std::array<int, 4>& k) {
  if (k[0] + k[1] + k[2] + k[3] != 0) return false;
  for (std::size_t i = 1; i < 4; ++i)
    if ((k[i] - k[0]) % 4 != 0) return false;
  return true;
}

/// True iff k is an integer zero-sum vector.
constexpr bool is_zero_sum(const std::array<int, 4>& k) {
  return k[0] + k[1] + k[2] + k[3] == 0;
}

/**
 * \brief A frequency index of H.
 *
 * Construction checks membership and throws std::invalid_argument otherwise.
 * Ordering is lexicographic, which fixes the enumeration order of all index
 * sets.
 */
class HIndex {
 public:
  constexpr HIndex() = default;
  constexpr HIndex(int k1, int k2, int k3, int k4) : k_{k1, k2, k3, k4} {
    if (!is_h_index(k_))
      throw std::invalid_argument("not an H index: (" + std::to_string(k1) + "," +
                                  std::to_string(k2) + "," + std::to_string(k3) +
                                  "," + std::to_string(k4) + ")");
  }
  explicit constexpr HIndex(const std::array<int, 4>& k)
      : HIndex(k[0], k[1], k[2], k[3]) {}

  constexpr int operator[](std::size_t i) const { return k_[i]; }
  constexpr const std::array<int, 4>& coords() const { return k_; }

  friend constexpr HIndex operator+(const HIndex& a, const HIndex& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
  }
  friend constexpr HIndex operator-(const HIndex& a, const HIndex& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
  }
  friend constexpr HIndex operator-(const HIndex& a) {
    return {-a[0], -a[1], -a[2], -a[3]};
  }
  friend constexpr auto operator<=>(const HIndex&, const HIndex&) = default;
  friend constexpr bool operator==(const HIndex&, const HIndex&) = default;

  constexpr bool is_zero() const {
    return k_[0] == 0 && k_[1] == 0 && k_[2] == 0 && k_[3] == 0;
  }
  constexpr int spread() const {
    return *std::max_element(k_.begin(), k_.end()) -
           *std::min_element(k_.begin(), k_.end());
  }

 private:
  std::array<int, 4> k_{0, 0, 0, 0};
};

struct HIndexHash {
  std::size_t operator()(const HIndex& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < 4; ++i) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(k[i]));
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::string to_string(const HIndex& k) {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
         std::to_string(k[2]) + "," + std::to_string(k[3]) + ")";
}

/// The node point k/(4n).
inline HomoPoint node_point(const HIndex& k, int n) {
  const double s = 4.0 * n;
  return {k[0] / s, k[1] / s, k[2] / s, k[3] / s};
}

/**
 * \brief Integer matrices relating Cartesian and homogeneous coordinates.
 *
 * A generates the fcc lattice, H maps Z^3 onto Z^4_H and U = 1/2 * U2 has
 * orthonormal columns with A = U^T H.
 */
struct LatticeConstants {
  static constexpr std::array<std::array<int, 3>, 3> A{{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
  static constexpr std::array<std::array<int, 3>, 4> H{
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}};
  /// Twice U, so the entries stay integral.
  static constexpr std::array<std::array<int, 3>, 4> U2{
      {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, -1, -1}}};

  static constexpr double U(std::size_t i, std::size_t j) { return 0.5 * U2[i][j]; }
  static constexpr int det_A() {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
  }
};

/// t = U x.
constexpr HomoPoint to_homogeneous(const Point3& x) {
  return {0.5 * (-x.x1 + x.x2 + x.x3), 0.5 * (x.x1 - x.x2 + x.x3),
          0.5 * (x.x1 + x.x2 - x.x3), 0.5 * (-x.x1 - x.x2 - x.x3)};
}

/// x = A (t1, t2, t3)^T.
constexpr Point3 from_homogeneous(const HomoPoint& t) {
  return {t[1] + t[2], t[0] + t[2], t[0] + t[1]};
}

/// Membership in the half-open domain Omega_H; comparisons are exact.
inline bool in_omega_H(const HomoPoint& t) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double d = t[i] - t[j];
      if (!(d > -1.0 && d <= 1.0)) return false;
    }
  return true;
}

/// Membership in the closed domain, |t_i - t_j| <= 1 + 1e-12.
inline bool in_closed_omega_H(const HomoPoint& t, double tol = 1e-12) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (std::abs(t[i] - t[j]) > 1.0 + tol) return false;
  return true;
}

namespace detail {

// How far t is outside the half-open domain; 0 inside.
inline double omega_violation(const HomoPoint& t) {
  double v = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double d = t[i] - t[j];
      if (d > 1.0) v = std::max(v, d - 1.0);
      if (d <= -1.0) v = std::max(v, -1.0 - d);
    }
  return v;
}

}  // namespace detail

/**
 * \brief The representative of t mod Z^4_H inside Omega_H.
 *
 * In lattice coordinates u = (t1, t2, t3) the period lattice is Z^3.  The
 * fractional part lands in [0,1)^3 and Omega_H sits inside [-3/4, 3/4]^3,
 * so one of the eight shifts by {0,-1}^3 is the answer.  If rounding puts
 * every candidate marginally outside, the least violating one is returned.
 */
inline HomoPoint fold_to_omega_H(const HomoPoint& t) {
  std::array<double, 3> frac{};
  for (std::size_t i = 0; i < 3; ++i) frac[i] = t[i] - std::floor(t[i]);

  HomoPoint best;
  double best_violation = INFINITY;
  for (int mask = 0; mask < 8; ++mask) {
    const HomoPoint c = HomoPoint::from_three(frac[0] - ((mask >> 0) & 1),
                                              frac[1] - ((mask >> 1) & 1),
                                              frac[2] - ((mask >> 2) & 1));
    if (in_omega_H(c)) return c;
    const double v = detail::omega_violation(c);
    if (v < best_violation) {
      best_violation = v;
      best = c;
    }
  }
  return best;
}

/// phi_k(t) = exp(i pi/2 k.t).
inline complex phi(const HIndex& k, const HomoPoint& t) {
  const double s = k[0] * t[0] + k[1] * t[1] + k[2] * t[2] + k[3] * t[3];
  return std::polar(1.0, 0.5 * pi * s);
}

}  // namespace fcc
