/**
 * \file trig_basis.hpp
 * \brief Generalized cosines TC_k = P+ phi_k and sines TS_k = -P- phi_k.
 *
 * The compact forms group the 24 terms of the projection by the way the
 * four positions split into two pairs.  For each of the six ordered splits
 * {a,b | c,d} below (every row an even permutation of 1234),
 *
 *   e^{(pi i/2)(k1+k2)(t_a+t_b)} f(pi/4 (k1-k2)(t_a-t_b)) f(pi/4 (k3-k4)(t_c-t_d))
 *
 * collects four of the terms, with f = cos for TC and f = sin for TS; the
 * average of the six rows is the projection.
 */
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fcc/index_sets.hpp"
#include "fcc/lattice.hpp"
#include "fcc/symmetry.hpp"

namespace fcc {

namespace detail {

inline constexpr std::array<std::array<int, 4>, 6> kPairSplits{{
    {0, 1, 2, 3}, {2, 3, 0, 1}, {0, 2, 3, 1}, {3, 1, 0, 2}, {0, 3, 1, 2}, {1, 2, 0, 3}}};

template <class F>
complex six_term(const HIndex& k, const HomoPoint& t, F f) {
  complex s = 0;
  for (const auto& r : kPairSplits) {
    const double ta = t[r[0]], tb = t[r[1]], tc = t[r[2]], td = t[r[3]];
    const complex prefactor = std::polar(1.0, 0.5 * pi * (k[0] + k[1]) * (ta + tb));
    s += prefactor * f(0.25 * pi * (k[0] - k[1]) * (ta - tb)) *
         f(0.25 * pi * (k[2] - k[3]) * (tc - td));
  }
  return s / 6.0;
}

inline void require_ordered(const HIndex& k, const char* what) {
  if (!in_Lambda(k))
    throw std::invalid_argument(std::string(what) + ": index " + to_string(k) +
                                " must satisfy k1 >= k2 >= k3 >= k4");
}

inline void require_strict(const HIndex& k, const char* what) {
  if (!(k[0] > k[1] && k[1] > k[2] && k[2] > k[3]))
    throw std::invalid_argument(std::string(what) + ": index " + to_string(k) +
                                " must be strictly decreasing");
}

}  // namespace detail

/// TC_k(t), compact form.  Throws unless k1 >= k2 >= k3 >= k4.
inline complex tc(const HIndex& k, const HomoPoint& t) {
  detail::require_ordered(k, "tc");
  return detail::six_term(k, t, [](double x) { return std::cos(x); });
}

/// TS_k(t), compact form.  Throws unless k is strictly decreasing.
inline complex ts(const HIndex& k, const HomoPoint& t) {
  detail::require_strict(k, "ts");
  return detail::six_term(k, t, [](double x) { return std::sin(x); });
}

/// (1/|kG|) sum over the orbit kG of phi_j(t); defined for any k.
inline complex tc_orbit(const HIndex& k, const HomoPoint& t) {
  const auto orb = orbit(k);
  complex s = 0;
  for (const auto& j : orb) s += phi(j, t);
  return s / static_cast<double>(orb.size());
}

/// -P- phi_k(t); defined for any k (vanishes when entries repeat).
inline complex ts_orbit(const HIndex& k, const HomoPoint& t) {
  return -project_minus([&](const HomoPoint& u) { return phi(k, u); }, t);
}

/// <TC_k, TC_k> = 1/|kG|.
inline Rational tc_orthogonality_value(const HIndex& k) {
  detail::require_ordered(k, "tc_orthogonality_value");
  return Rational(1, static_cast<std::int64_t>(orbit(k).size()));
}

}  // namespace fcc
