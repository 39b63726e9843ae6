/**
 * \file boundary.hpp
 * \brief Boundary strata B_{I,J} of the closed dodecahedron.
 *
 * For t in the closed domain, I collects the coordinates that sit exactly one
 * unit above some other coordinate and J the ones that sit one unit below.
 * Points of a stratum with |I| = i, |J| = j are identified mod Z^4_H with
 * binom(i+j, i) points, obtained by permuting the coordinates in I u J.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcc/lattice.hpp"
#include "fcc/symmetry.hpp"

namespace fcc {

/// I and J as bitmasks over zero-based coordinate positions.
struct BoundaryClass {
  std::uint8_t I = 0;
  std::uint8_t J = 0;

  constexpr bool interior() const { return I == 0 && J == 0; }
  constexpr int size_I() const { return std::popcount(I); }
  constexpr int size_J() const { return std::popcount(J); }
  constexpr bool contains_I(int i) const { return (I >> i) & 1; }
  constexpr bool contains_J(int j) const { return (J >> j) & 1; }
  friend constexpr bool operator==(const BoundaryClass&, const BoundaryClass&) = default;
};

namespace detail {

template <class Diff>
BoundaryClass classify_by(Diff is_unit_gap) {
  BoundaryClass c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && is_unit_gap(i, j)) {
        c.I |= static_cast<std::uint8_t>(1u << i);
        c.J |= static_cast<std::uint8_t>(1u << j);
      }
  return c;
}

// Permutations that fix every position outside mask.
inline std::vector<Perm4> perms_supported_on(std::uint8_t mask) {
  std::vector<Perm4> out;
  for (const auto& s : all_perms()) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      if (!((mask >> i) & 1) && s(i) != i) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Classify a point of the closed domain; unit gaps are detected to 1e-9.
inline BoundaryClass classify(const HomoPoint& t, double tol = 1e-9) {
  if (!in_closed_omega_H(t))
    throw std::domain_error("classify: point lies outside the closed dodecahedron");
  return detail::classify_by(
      [&](int i, int j) { return std::abs(t[i] - t[j] - 1.0) <= tol; });
}

/// Exact classification of the node k/(4n); requires k in H_n*.
inline BoundaryClass classify_index(const HIndex& k, int n) {
  if (n < 1) throw std::invalid_argument("classify_index: n must be positive");
  if (k.spread() > 4 * n)
    throw std::domain_error("classify_index: " + to_string(k) + " is not in H_n* for n = " +
                            std::to_string(n));
  return detail::classify_by([&](int i, int j) { return k[i] - k[j] == 4 * n; });
}

/// All points of the closed domain congruent to t mod Z^4_H.
inline std::vector<HomoPoint> congruent_orbit(const HomoPoint& t) {
  const BoundaryClass c = classify(t);
  std::vector<HomoPoint> out;
  for (const auto& s : detail::perms_supported_on(c.I | c.J)) {
    const HomoPoint p = act(s, t);
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const HomoPoint& q) { return distance(p, q) < 1e-10; });
    if (!dup) out.push_back(p);
  }
  return out;
}

/// Integer version of congruent_orbit for the node k/(4n); sorted.
inline std::vector<HIndex> congruent_orbit_index(const HIndex& k, int n) {
  const BoundaryClass c = classify_index(k, n);
  std::vector<HIndex> out;
  for (const auto& s : detail::perms_supported_on(c.I | c.J)) out.push_back(act(s, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fcc
