/**
 * \file kernels.hpp
 * \brief Dirichlet and interpolation kernels, compact and direct.
 *
 * Compact forms are products of sine ratios and a handful of cosines; the
 * direct forms sum phi_k over an index set and serve as reference values.
 *
 *   K_n(t)   = sum_{j=0}^{n} e^{2 pi i j t}
 *   Θ_n(t)   = prod_j sin(pi n t_j) / sin(pi t_j)
 *   D_n(t)   = sum_{H_n*} phi_k(t)                 = Θ_{n+1}(t) - Θ_n(t)
 *   Φ_n*(t)  = (1/4n^3) sum_{H_n*} c_k phi_k(t)
 *   Φ_n(t)   = (1/4n^3) sum_{H_n} phi_k(t)
 */
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcc/index_sets.hpp"
#include "fcc/lattice.hpp"
#include "fcc/summation.hpp"

namespace fcc {

/// Below this |sin(pi r)| a sine ratio is replaced by its limit.
inline constexpr double kSingularThreshold = 1e-8;

/**
 * sin(pi a t) / sin(pi t).  With t = m + r, m = round(t), the ratio is
 * (-1)^{m(a-1)} sin(pi a r) / sin(pi r) and tends to a (-1)^{m(a-1)}.
 */
inline double sin_ratio(int a, double t) {
  const double m = std::nearbyint(t);
  const double r = t - m;
  const bool flip = (static_cast<long long>(m) & 1) && ((a - 1) & 1);
  const double s = std::sin(pi * r);
  const double v = std::abs(s) < kSingularThreshold ? a : std::sin(pi * a * r) / s;
  return flip ? -v : v;
}

/// K_n(t) = e^{pi i n t} sin(pi (n+1) t) / sin(pi t).
inline complex K_n(int n, double t) {
  if (n < 0) throw std::invalid_argument("K_n: n must be >= 0");
  return std::polar(sin_ratio(n + 1, t), pi * n * t);
}

inline double theta_n(int n, const HomoPoint& t) {
  if (n < 0) throw std::invalid_argument("theta_n: n must be >= 0");
  double p = 1;
  for (std::size_t j = 0; j < 4; ++j) p *= sin_ratio(n, t[j]);
  return p;
}

namespace detail {

/**
 * Trigonometric data of one coordinate for degree n: sine ratios of orders
 * n-1, n, n+1 and e^{i pi n t}.  Two sincos calls serve every term of the
 * compact kernels.
 */
struct CoordTrig {
  double ratio_m1, ratio_0, ratio_p1;  // orders n-1, n, n+1
  complex e_n;                         // e^{i pi n t}

  CoordTrig(int n, double t) {
    const double m = std::nearbyint(t);
    const double r = t - m;
    const bool odd_m = static_cast<long long>(m) & 1;
    const double s1 = std::sin(pi * r), c1 = std::cos(pi * r);
    const double sn = std::sin(pi * n * r), cn = std::cos(pi * n * r);
    // (-1)^{m(a-1)}: a = n±1 share the sign (-1)^{mn}, a = n has (-1)^{m(n-1)}.
    const double sign_pm = (odd_m && (n & 1)) ? -1.0 : 1.0;
    const double sign_0 = (odd_m && !(n & 1)) ? -1.0 : 1.0;
    if (std::abs(s1) < kSingularThreshold) {
      ratio_m1 = sign_pm * (n - 1);
      ratio_0 = sign_0 * n;
      ratio_p1 = sign_pm * (n + 1);
    } else {
      ratio_m1 = sign_pm * (sn * c1 - cn * s1) / s1;
      ratio_0 = sign_0 * sn / s1;
      ratio_p1 = sign_pm * (sn * c1 + cn * s1) / s1;
    }
    const double sign_e = (odd_m && (n & 1)) ? -1.0 : 1.0;  // e^{i pi n m}
    e_n = complex(sign_e * cn, sign_e * sn);
  }
};

struct KernelTrig {
  CoordTrig c[4];
  KernelTrig(int n, const HomoPoint& t)
      : c{{n, t[0]}, {n, t[1]}, {n, t[2]}, {n, t[3]}} {}

  double theta_m1() const { return c[0].ratio_m1 * c[1].ratio_m1 * c[2].ratio_m1 * c[3].ratio_m1; }
  double theta_0() const { return c[0].ratio_0 * c[1].ratio_0 * c[2].ratio_0 * c[3].ratio_0; }
  double theta_p1() const { return c[0].ratio_p1 * c[1].ratio_p1 * c[2].ratio_p1 * c[3].ratio_p1; }

  // sum_nu ratio_{n-1}(t_nu) sum_{j != nu} cos(n pi (2 t_j + t_nu))
  double edge_sum() const {
    double s = 0;
    for (int v = 0; v < 4; ++v) {
      double inner = 0;
      for (int j = 0; j < 4; ++j)
        if (j != v) inner += (c[j].e_n * c[j].e_n * c[v].e_n).real();
      s += c[v].ratio_m1 * inner;
    }
    return s;
  }
};

template <class Indices, class Weight>
complex weighted_phi_sum(const Indices& ks, const HomoPoint& t, Weight w) {
  return parallel_sum(ks.size(), [&](std::size_t i) { return w(i) * phi(ks[i], t); });
}

inline void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace detail

/// D_n(t) = Θ_{n+1}(t) - Θ_n(t).
inline double dirichlet(int n, const HomoPoint& t) {
  if (n < 0) throw std::invalid_argument("dirichlet: n must be >= 0");
  if (n == 0) return 1.0;
  const detail::KernelTrig k(n, t);
  return k.theta_p1() - k.theta_0();
}

/// D_n(t) = prod K_n(t_j) - prod (K_n(t_j) - 1).
inline complex dirichlet_product(int n, const HomoPoint& t) {
  complex a = 1, b = 1;
  for (std::size_t j = 0; j < 4; ++j) {
    const complex kj = K_n(n, t[j]);
    a *= kj;
    b *= kj - 1.0;
  }
  return a - b;
}

/// Direct sum of phi_k over H_n*.
inline complex dirichlet_direct(int n, const HomoPoint& t) {
  if (n < 0) throw std::invalid_argument("dirichlet_direct: n must be >= 0");
  if (n == 0) return 1.0;
  const auto ks = generate_Hn_star(n);
  return detail::weighted_phi_sum(ks, t, [](std::size_t) { return 1.0; });
}

/// 2 sum_nu sin((n-1) pi t_nu)/sin(pi t_nu) sum_{j != nu} cos(n pi (2 t_j + t_nu)).
inline double edge_kernel(int n, const HomoPoint& t) {
  detail::require_positive(n, "edge_kernel");
  return 2.0 * detail::KernelTrig(n, t).edge_sum();
}

/// Direct sum of phi_k over the edge strata (1,2) and (2,1) of H_n*.
inline complex edge_kernel_direct(int n, const HomoPoint& t) {
  detail::require_positive(n, "edge_kernel_direct");
  std::vector<HIndex> ks;
  for (const auto& k : generate_Hn_star(n)) {
    const auto s = stratum_of_index(k, n);
    if (s.i + s.j == 3) ks.push_back(k);
  }
  return detail::weighted_phi_sum(ks, t, [](std::size_t) { return 1.0; });
}

/// Φ_n*, compact form.
inline double phi_n_star(int n, const HomoPoint& t) {
  detail::require_positive(n, "phi_n_star");
  const detail::KernelTrig k(n, t);
  double single = 0, pairs = 0;
  for (int j = 0; j < 4; ++j) {
    const complex e2 = k.c[j].e_n * k.c[j].e_n;
    single += e2.real();
    for (int l = j + 1; l < 4; ++l) pairs += (e2 * k.c[l].e_n * k.c[l].e_n).real();
  }
  const double bracket = 0.5 * (k.theta_p1() - k.theta_m1()) - k.edge_sum() / 3.0 -
                         0.5 * single - pairs / 3.0;
  return bracket / (4.0 * n * n * n);
}

/// Φ_n*, direct weighted sum over H_n*.
inline complex phi_n_star_direct(int n, const HomoPoint& t) {
  detail::require_positive(n, "phi_n_star_direct");
  const auto ks = generate_Hn_star(n);
  std::vector<double> w(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) w[i] = boost::rational_cast<double>(weight_c(ks[i], n));
  return detail::weighted_phi_sum(ks, t, [&](std::size_t i) { return w[i]; }) /
         (4.0 * n * n * n);
}

namespace detail {

/// Boundary indices of H_n* with weight 1[k in H_n] - c_k.
struct PhiCorrection {
  std::vector<HIndex> k;
  std::vector<double> w;
};

inline std::shared_ptr<const PhiCorrection> phi_correction(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PhiCorrection>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto c = std::make_shared<PhiCorrection>();
    for (const auto& k : generate_Hn_star(n)) {
      if (in_Hn_circ(k, n)) continue;
      c->k.push_back(k);
      c->w.push_back((in_Hn(k, n) ? 1.0 : 0.0) - boost::rational_cast<double>(weight_c(k, n)));
    }
    slot = std::move(c);
  }
  return slot;
}

}  // namespace detail

/// Φ_n as Φ_n* plus the boundary correction (O(n^2) terms).
inline complex phi_n_fund(int n, const HomoPoint& t) {
  detail::require_positive(n, "phi_n_fund");
  const auto corr = detail::phi_correction(n);
  complex s = 0;
  for (std::size_t i = 0; i < corr->k.size(); ++i) s += corr->w[i] * phi(corr->k[i], t);
  return phi_n_star(n, t) + s / (4.0 * n * n * n);
}

/// Φ_n, direct sum over H_n.
inline complex phi_n_fund_direct(int n, const HomoPoint& t) {
  detail::require_positive(n, "phi_n_fund_direct");
  const auto ks = generate_Hn(n);
  return detail::weighted_phi_sum(ks, t, [](std::size_t) { return 1.0; }) / (4.0 * n * n * n);
}

/// A compact kernel with its direct-sum counterpart.
struct KernelPair {
  std::string name;
  int min_degree;
  std::function<complex(int, const HomoPoint&)> fast;
  std::function<complex(int, const HomoPoint&)> reference;
};

inline const std::vector<KernelPair>& kernel_pairs() {
  static const std::vector<KernelPair> pairs{
      {"dirichlet", 0, [](int n, const HomoPoint& t) { return complex(dirichlet(n, t)); },
       dirichlet_direct},
      {"dirichlet-product", 0, dirichlet_product, dirichlet_direct},
      {"phistar", 1, [](int n, const HomoPoint& t) { return complex(phi_n_star(n, t)); },
       phi_n_star_direct},
      {"phin", 1, phi_n_fund, phi_n_fund_direct},
      {"edge", 1, [](int n, const HomoPoint& t) { return complex(edge_kernel(n, t)); },
       edge_kernel_direct},
  };
  return pairs;
}

}  // namespace fcc
