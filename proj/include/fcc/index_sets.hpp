/**
 * \file index_sets.hpp
 * \brief Node and frequency sets of degree n with their strata and weights.
 *
 * All sets are enumerated through the reduced coordinates
 * k'_i = (k_i - k_4)/4, i = 1..3, in which they are boxes or simplices of Z^3,
 * and returned in lexicographic order of the full index.
 *
 *   H_n   : -4n <  k_i - k_j <= 4n  (i < j)      |H_n|  = 4n^3
 *   H_n*  : |k_i - k_j| <= 4n                    |H_n*| = (n+1)^4 - n^4
 *   H_n°  : |k_i - k_j| <  4n                    |H_n°| = n^4 - (n-1)^4
 *   Λ_n   : k4 <= k3 <= k2 <= k1 <= k4 + 4n      |Λ_n|  = binom(n+3, 3)
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "fcc/boundary.hpp"
#include "fcc/lattice.hpp"

namespace fcc {

using Rational = boost::rational<std::int64_t>;

namespace detail {

inline void require_degree(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": degree n must be >= 1");
}

inline HIndex from_reduced(int a, int b, int c) {
  const int j4 = -(a + b + c);
  return HIndex(4 * a + j4, 4 * b + j4, 4 * c + j4, j4);
}

template <class Keep>
std::vector<HIndex> enumerate_reduced(int lo, int hi, Keep keep) {
  std::vector<HIndex> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c)
        if (keep(a, b, c)) out.push_back(from_reduced(a, b, c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline bool in_Hn_star(const HIndex& k, int n) { return k.spread() <= 4 * n; }
inline bool in_Hn_circ(const HIndex& k, int n) { return k.spread() < 4 * n; }
inline bool in_Hn(const HIndex& k, int n) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const int d = k[i] - k[j];
      if (!(d > -4 * n && d <= 4 * n)) return false;
    }
  return true;
}

inline std::vector<HIndex> generate_Hn(int n) {
  detail::require_degree(n, "generate_Hn");
  const auto half_open = [n](int d) { return -n < d && d <= n; };
  return detail::enumerate_reduced(-n, n, [&](int a, int b, int c) {
    return half_open(a) && half_open(b) && half_open(c) && half_open(a - b) &&
           half_open(a - c) && half_open(b - c);
  });
}

inline std::vector<HIndex> generate_Hn_star(int n) {
  detail::require_degree(n, "generate_Hn_star");
  return detail::enumerate_reduced(-n, n, [n](int a, int b, int c) {
    return std::abs(a - b) <= n && std::abs(a - c) <= n && std::abs(b - c) <= n;
  });
}

inline std::vector<HIndex> generate_Hn_circ(int n) {
  detail::require_degree(n, "generate_Hn_circ");
  return detail::enumerate_reduced(-n, n, [n](int a, int b, int c) {
    return std::abs(a) < n && std::abs(b) < n && std::abs(c) < n && std::abs(a - b) < n &&
           std::abs(a - c) < n && std::abs(b - c) < n;
  });
}

/// Interior, or the boundary stratum (i, j) = (|I|, |J|).
struct StratumLabel {
  int i = 0;
  int j = 0;

  constexpr bool interior() const { return i == 0 && j == 0; }
  std::string name() const {
    return interior() ? "interior" : "B" + std::to_string(i) + std::to_string(j);
  }
  friend constexpr bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

inline StratumLabel stratum_of_index(const HIndex& k, int n) {
  const BoundaryClass c = classify_index(k, n);
  return {c.size_I(), c.size_J()};
}

/// c_k = 1 / binom(i+j, i); 1 in the interior.
inline Rational weight_c(const HIndex& k, int n) {
  const StratumLabel s = stratum_of_index(k, n);
  if (s.interior()) return Rational(1);
  std::int64_t binom = 1;
  for (int m = 1; m <= s.i; ++m) binom = binom * (s.j + m) / m;
  return Rational(1, binom);
}

// ---------------------------------------------------------------------------
// Tetrahedral sets

enum class TetraStratum { Interior, Face, Edge1, Edge2, Vertex };

constexpr int tetra_weight(TetraStratum s) {
  switch (s) {
    case TetraStratum::Interior: return 24;
    case TetraStratum::Face: return 12;
    case TetraStratum::Edge1: return 6;
    case TetraStratum::Edge2: return 4;
    case TetraStratum::Vertex: return 1;
  }
  return 0;
}

inline std::string to_string(TetraStratum s) {
  switch (s) {
    case TetraStratum::Interior: return "interior";
    case TetraStratum::Face: return "face";
    case TetraStratum::Edge1: return "edge1";
    case TetraStratum::Edge2: return "edge2";
    case TetraStratum::Vertex: return "vertex";
  }
  return "?";
}

inline bool in_Lambda(const HIndex& k) { return k[0] >= k[1] && k[1] >= k[2] && k[2] >= k[3]; }
inline bool in_Lambda_n(const HIndex& k, int n) { return in_Lambda(k) && k[0] <= k[3] + 4 * n; }

namespace detail {

// k equals one of the parametrized edge points for some integer 0 < p < n.
template <class Make>
bool on_param_edge(const HIndex& k, int n, Make make) {
  for (int p = 1; p < n; ++p)
    if (make(p) == k.coords()) return true;
  return false;
}

}  // namespace detail

/**
 * Stratum of k in Λ_n, read off the explicit point lists: the strict chain
 * for the interior, the four one-equality chains for faces, the two and four
 * parametrized edge families and the four vertices.
 */
inline TetraStratum tetra_stratum_of(const HIndex& k, int n) {
  detail::require_degree(n, "tetra_stratum_of");
  if (!in_Lambda_n(k, n))
    throw std::domain_error("tetra_stratum_of: " + to_string(k) + " is not in Lambda_n for n = " +
                            std::to_string(n));
  const int k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3], top = k4 + 4 * n;

  if (k4 < k3 && k3 < k2 && k2 < k1 && k1 < top) return TetraStratum::Interior;
  if ((k4 < k3 && k3 < k2 && k2 < k1 && k1 == top) ||
      (k4 < k3 && k3 < k2 && k2 == k1 && k1 < top) ||
      (k4 < k3 && k3 == k2 && k2 < k1 && k1 < top) ||
      (k4 == k3 && k3 < k2 && k2 < k1 && k1 < top))
    return TetraStratum::Face;

  using A = std::array<int, 4>;
  if (detail::on_param_edge(k, n, [](int p) { return A{2 * p, 2 * p, -2 * p, -2 * p}; }) ||
      detail::on_param_edge(k, n, [n](int p) {
        return A{2 * p + n, n - 2 * p, n - 2 * p, 2 * p - 3 * n};
      }))
    return TetraStratum::Edge1;
  if (detail::on_param_edge(k, n, [](int p) { return A{p, p, p, -3 * p}; }) ||
      detail::on_param_edge(k, n, [](int p) { return A{3 * p, -p, -p, -p}; }) ||
      detail::on_param_edge(k, n, [n](int p) { return A{n + p, n + p, n - 3 * p, p - 3 * n}; }) ||
      detail::on_param_edge(k, n, [n](int p) { return A{3 * n - p, 3 * p - n, -n - p, -n - p}; }))
    return TetraStratum::Edge2;

  const A vertices[] = {{0, 0, 0, 0}, {2 * n, 2 * n, -2 * n, -2 * n}, {3 * n, -n, -n, -n},
                        {n, n, n, -3 * n}};
  for (const auto& v : vertices)
    if (v == k.coords()) return TetraStratum::Vertex;

  throw std::logic_error("tetra_stratum_of: " + to_string(k) + " matched no stratum");
}

/// λ_k for k in Λ_n.
inline int weight_lambda(const HIndex& k, int n) { return tetra_weight(tetra_stratum_of(k, n)); }

struct LambdaNode {
  HIndex k;
  TetraStratum stratum;
};

/// Λ_n with strata, lexicographic order.
inline std::vector<LambdaNode> generate_Lambda_n(int n) {
  detail::require_degree(n, "generate_Lambda_n");
  std::vector<LambdaNode> out;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        const HIndex k = detail::from_reduced(a, b, c);
        out.push_back({k, tetra_stratum_of(k, n)});
      }
  std::sort(out.begin(), out.end(), [](const LambdaNode& x, const LambdaNode& y) { return x.k < y.k; });
  return out;
}

/// Λ_n°, the strictly decreasing members of Λ_n away from the far face; empty for n < 4.
inline std::vector<HIndex> generate_Lambda_n_circ(int n) {
  detail::require_degree(n, "generate_Lambda_n_circ");
  std::vector<HIndex> out;
  for (const auto& node : generate_Lambda_n(n))
    if (node.stratum == TetraStratum::Interior) out.push_back(node.k);
  return out;
}

}  // namespace fcc
