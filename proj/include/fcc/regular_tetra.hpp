/**
 * \file regular_tetra.hpp
 * \brief Cosine interpolation written in corner-simplex coordinates.
 *
 * For f3 on 0 <= x3 <= x2 <= x1 <= 1 the interpolant reads f3 at
 * (k1, k2, k3)/n, 0 <= k3 <= k2 <= k1 <= n, and is the LnStar operator in
 * homogeneous coordinates composed with x_i = t_i - t_4.
 */
#pragma once

#include <vector>

#include "fcc/interpolation.hpp"
#include "fcc/tetra_coords.hpp"

namespace fcc {

class RegularInterpolant {
 public:
  template <class F3>
  RegularInterpolant(F3&& f3, int n) : inner_(build(f3, n)) {}

  complex operator()(const Point3& x) const { return inner_(regular_to_homogeneous(x)); }
  const Interpolant& homogeneous() const { return inner_; }

 private:
  template <class F3>
  static Interpolant build(F3& f3, int n) {
    FundamentalBasis basis(InterpKind::LnStar, n);
    std::vector<complex> values;
    values.reserve(basis.size());
    for (const auto& j : basis.nodes()) {
      const RegularIndex k = index_h_to_regular(j);
      values.push_back(complex(f3(Point3{double(k.k1) / n, double(k.k2) / n, double(k.k3) / n})));
    }
    return Interpolant(std::move(basis), std::move(values));
  }

  Interpolant inner_;
};

/// One-shot evaluation; build a RegularInterpolant to evaluate repeatedly.
template <class F3>
complex regular_interpolate(F3&& f3, int n, const Point3& x) {
  return RegularInterpolant(f3, n)(x);
}

}  // namespace fcc
