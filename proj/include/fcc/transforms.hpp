/**
 * \file transforms.hpp
 * \brief Inner products, cubature rules and Fourier partial sums.
 *
 * Functions are any callables HomoPoint -> number.  Continuous integrals are
 * normalized means over one period cell, realized in the lattice coordinates
 * (t1, t2, t3) in [0,1)^3 by the equal-weight trapezoid rule, which is exact
 * for trigonometric polynomials of per-axis degree below the point count.
 */
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "fcc/index_sets.hpp"
#include "fcc/kernels.hpp"
#include "fcc/lattice.hpp"
#include "fcc/summation.hpp"
#include "fcc/tetra_coords.hpp"

namespace fcc {

using SampleFunction = std::function<complex(const HomoPoint&)>;

/**
 * A function known only at the nodes j/4n, keyed by index.  Evaluating it
 * anywhere else throws std::domain_error.
 */
inline SampleFunction node_table_function(std::map<HIndex, complex> values, int n) {
  detail::require_degree(n, "node_table_function");
  return [values = std::move(values), n](const HomoPoint& t) -> complex {
    std::array<int, 4> j{};
    for (std::size_t i = 0; i < 4; ++i) {
      const double s = 4.0 * n * t[i];
      j[i] = static_cast<int>(std::lround(s));
      if (std::abs(s - j[i]) > 1e-9)
        throw std::domain_error("node_table_function: point is not a node of degree " +
                                std::to_string(n));
    }
    if (!is_h_index(j)) throw std::domain_error("node_table_function: point is not a node");
    const auto it = values.find(HIndex(j));
    if (it == values.end())
      throw std::domain_error("node_table_function: no value for node " + to_string(HIndex(j)));
    return it->second;
  };
}

namespace detail {

template <class F, class G>
complex weighted_node_sum(const std::vector<HIndex>& ks, const std::vector<double>& w, int n,
                          F&& f, G&& g) {
  return parallel_sum(ks.size(), [&](std::size_t i) {
    const HomoPoint t = node_point(ks[i], n);
    return w[i] * complex(f(t)) * std::conj(complex(g(t)));
  });
}

inline const auto one_function = [](const HomoPoint&) { return complex(1.0); };

}  // namespace detail

/// (1/4n^3) sum over H_n of f conj(g).
template <class F, class G>
complex inner_n(F&& f, G&& g, int n) {
  const auto ks = generate_Hn(n);
  const std::vector<double> w(ks.size(), 1.0 / (4.0 * n * n * n));
  return detail::weighted_node_sum(ks, w, n, f, g);
}

/// (1/4n^3) sum over H_n* of c_j f conj(g).
template <class F, class G>
complex inner_n_star(F&& f, G&& g, int n) {
  const auto ks = generate_Hn_star(n);
  std::vector<double> w(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i)
    w[i] = boost::rational_cast<double>(weight_c(ks[i], n)) / (4.0 * n * n * n);
  return detail::weighted_node_sum(ks, w, n, f, g);
}

/// (1/4n^3) sum over Λ_n of λ_j f conj(g).
template <class F, class G>
complex inner_tetra(F&& f, G&& g, int n) {
  const auto nodes = generate_Lambda_n(n);
  std::vector<HIndex> ks;
  std::vector<double> w;
  for (const auto& node : nodes) {
    ks.push_back(node.k);
    w.push_back(tetra_weight(node.stratum) / (4.0 * n * n * n));
  }
  return detail::weighted_node_sum(ks, w, n, f, g);
}

/// (6/n^3) sum over Λ_n° of f conj(g).
template <class F, class G>
complex inner_tetra_interior(F&& f, G&& g, int n) {
  const auto ks = generate_Lambda_n_circ(n);
  const std::vector<double> w(ks.size(), 6.0 / (double(n) * n * n));
  return detail::weighted_node_sum(ks, w, n, f, g);
}

/// Cubature on the dodecahedron: (1/4n^3) sum over H_n* of c_j f(j/4n).
template <class F>
complex cubature_dodeca(F&& f, int n) {
  return inner_n_star(f, detail::one_function, n);
}

/// Cubature on the tetrahedron: (1/4n^3) sum over Λ_n of λ_j f(j/4n).
template <class F>
complex cubature_tetra(F&& f, int n) {
  return inner_tetra(f, detail::one_function, n);
}

/**
 * The tetrahedral rule in corner-simplex coordinates: f3 is sampled at
 * (k1, k2, k3)/n, 0 <= k3 <= k2 <= k1 <= n, with the weight of the
 * corresponding node of Λ_n.
 */
template <class F3>
complex cubature_tetra_regular(F3&& f3, int n) {
  detail::require_degree(n, "cubature_tetra_regular");
  const auto nodes = generate_Lambda_n(n);
  return parallel_sum(nodes.size(), [&](std::size_t i) {
    const RegularIndex r = index_h_to_regular(nodes[i].k);
    const Point3 x{double(r.k1) / n, double(r.k2) / n, double(r.k3) / n};
    return tetra_weight(nodes[i].stratum) / (4.0 * n * n * n) * complex(f3(x));
  });
}

/// Default point count per axis for the continuous rule at degree n.
constexpr int default_quad_order(int n) { return 4 * n + 4; }

/// Normalized mean of f over a period cell, q^3 trapezoid points.
template <class F>
complex continuous_mean(F&& f, int quad_order) {
  if (quad_order < 2) throw std::invalid_argument("continuous_mean: quad_order must be >= 2");
  const std::size_t q = static_cast<std::size_t>(quad_order);
  return parallel_sum(q * q * q, [&](std::size_t idx) {
           const double a = double(idx / (q * q)) / q, b = double((idx / q) % q) / q,
                        c = double(idx % q) / q;
           return complex(f(HomoPoint::from_three(a, b, c)));
         }) /
         static_cast<double>(q * q * q);
}

/// <f, g> = normalized integral of f conj(g) over Omega_H.
template <class F, class G>
complex continuous_inner(F&& f, G&& g, int quad_order) {
  return continuous_mean(
      [&](const HomoPoint& t) { return complex(f(t)) * std::conj(complex(g(t))); }, quad_order);
}

/// Fourier coefficients over H_n*, in lexicographic index order.
struct FourierCoeffs {
  int n = 0;
  std::vector<HIndex> k;
  std::vector<complex> c;

  complex at(const HIndex& j) const {
    const auto it = std::lower_bound(k.begin(), k.end(), j);
    if (it == k.end() || *it != j)
      throw std::out_of_range("FourierCoeffs: " + to_string(j) + " is not in H_n*");
    return c[static_cast<std::size_t>(it - k.begin())];
  }
};

/**
 * Coefficients <f, phi_k> for k in H_n*.  f is sampled once on the
 * quad_order^3 trapezoid grid and the grid is reused for every k.
 */
template <class F>
FourierCoeffs fourier_coeffs(F&& f, int n, int quad_order) {
  detail::require_degree(n, "fourier_coeffs");
  if (quad_order < 2) throw std::invalid_argument("fourier_coeffs: quad_order must be >= 2");
  const std::size_t q = static_cast<std::size_t>(quad_order), total = q * q * q;
  std::vector<HomoPoint> pts(total);
  for (std::size_t idx = 0; idx < total; ++idx)
    pts[idx] = HomoPoint::from_three(double(idx / (q * q)) / q, double((idx / q) % q) / q,
                                     double(idx % q) / q);
  const auto samples = parallel_map(total, [&](std::size_t i) { return complex(f(pts[i])); });

  FourierCoeffs out;
  out.n = n;
  out.k = generate_Hn_star(n);
  out.c = parallel_map(out.k.size(), [&](std::size_t i) {
    std::vector<complex> terms(total);
    for (std::size_t p = 0; p < total; ++p) terms[p] = samples[p] * std::conj(phi(out.k[i], pts[p]));
    return pairwise_sum(terms) / static_cast<double>(total);
  });
  return out;
}

/// S_n f(t) = sum over H_n* of f^_k phi_k(t).
inline complex partial_sum(const FourierCoeffs& coeffs, const HomoPoint& t) {
  std::vector<complex> terms(coeffs.k.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = coeffs.c[i] * phi(coeffs.k[i], t);
  return pairwise_sum(terms);
}

/**
 * Estimate of ||S_n|| = max_t mean_s |D_n(t - s)|.  The integrand of the
 * maximum is S4-invariant, so t ranges over a grid on △_H; the inner mean
 * uses quad_order^3 trapezoid points.  The result is a lower estimate.
 */
inline double lebesgue_Sn(int n, int grid_per_axis = 17, int quad_order = 64) {
  detail::require_degree(n, "lebesgue_Sn");
  if (quad_order < 2) throw std::invalid_argument("lebesgue_Sn: quad_order must be >= 2");
  const auto ts = tetra_grid(grid_per_axis);
  const std::size_t q = static_cast<std::size_t>(quad_order), total = q * q * q;
  const auto values = parallel_map(ts.size(), [&](std::size_t i) {
    std::vector<double> terms(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      const auto s = HomoPoint::from_three(double(idx / (q * q)) / q, double((idx / q) % q) / q,
                                           double(idx % q) / q);
      terms[idx] = std::abs(dirichlet(n, ts[i] - s));
    }
    return pairwise_sum(terms) / static_cast<double>(total);
  });
  return *std::max_element(values.begin(), values.end());
}

}  // namespace fcc
