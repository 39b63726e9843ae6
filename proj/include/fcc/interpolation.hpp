/**
 * \file interpolation.hpp
 * \brief The four interpolation operators and their Lebesgue constants.
 *
 *   kind    nodes   fundamental function of node j
 *   In      H_n     Φ_n(t - j/4n)
 *   InStar  H_n*    Φ_n*(t - j/4n)
 *   Ln      Λ_n°    (6/n^3) P-_t D_{n-1}(t - j/4n)
 *   LnStar  Λ_n     λ_j P+_t Φ_n*(t - j/4n)
 *
 * Each fundamental function is stored as a short list of shifted kernel
 * terms: since D and Φ* are S4-invariant, a projection in t equals the same
 * projection applied to the node, so P± becomes a signed sum over the node
 * orbit.  Interpolants keep node values and are evaluated by direct sums.
 *
 * Λ_n° is empty for n < 4 (a strictly decreasing index in H spans at least
 * 12), so Ln interpolants of degree 2 and 3 have no nodes and vanish.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcc/index_sets.hpp"
#include "fcc/kernels.hpp"
#include "fcc/summation.hpp"
#include "fcc/symmetry.hpp"
#include "fcc/tetra_coords.hpp"
#include "fcc/trig_basis.hpp"

namespace fcc {

enum class InterpKind { In, InStar, Ln, LnStar };

inline std::string to_string(InterpKind k) {
  switch (k) {
    case InterpKind::In: return "in";
    case InterpKind::InStar: return "instar";
    case InterpKind::Ln: return "ln";
    case InterpKind::LnStar: return "lnstar";
  }
  return "?";
}

inline InterpKind parse_interp_kind(const std::string& s) {
  if (s == "in") return InterpKind::In;
  if (s == "instar") return InterpKind::InStar;
  if (s == "ln") return InterpKind::Ln;
  if (s == "lnstar") return InterpKind::LnStar;
  throw std::invalid_argument("unknown operator kind '" + s + "' (expected in|instar|ln|lnstar)");
}

/// Human-readable name of the node set of an operator.
inline std::string node_set_name(InterpKind k) {
  switch (k) {
    case InterpKind::In: return "H_n";
    case InterpKind::InStar: return "H_n*";
    case InterpKind::Ln: return "Lambda_n interior";
    case InterpKind::LnStar: return "Lambda_n";
  }
  return "?";
}

inline int min_degree(InterpKind k) { return k == InterpKind::Ln ? 2 : 1; }

inline std::vector<HIndex> interpolation_nodes(InterpKind kind, int n) {
  if (n < min_degree(kind))
    throw std::invalid_argument("operator " + to_string(kind) + " needs n >= " +
                                std::to_string(min_degree(kind)));
  switch (kind) {
    case InterpKind::In: return generate_Hn(n);
    case InterpKind::InStar: return generate_Hn_star(n);
    case InterpKind::Ln: return generate_Lambda_n_circ(n);
    case InterpKind::LnStar: {
      std::vector<HIndex> out;
      for (const auto& node : generate_Lambda_n(n)) out.push_back(node.k);
      return out;
    }
  }
  return {};
}

/**
 * \brief The fundamental functions of one operator at one degree.
 *
 * Fundamental function i is sum_{r in range i} weight_r * K(t - shift_r),
 * with K = Φ_n, Φ_n* or D_{n-1} depending on the kind.
 */
class FundamentalBasis {
 public:
  FundamentalBasis(InterpKind kind, int n) : kind_(kind), n_(n), nodes_(interpolation_nodes(kind, n)) {
    begin_.reserve(nodes_.size() + 1);
    for (const auto& j : nodes_) {
      begin_.push_back(shifts_.size());
      switch (kind) {
        case InterpKind::In:
        case InterpKind::InStar: add(j, 1.0); break;
        case InterpKind::Ln: {
          const double w = 6.0 / (double(n) * n * n) / 24.0;
          for (const auto& s : all_perms()) add(act(s, j), s.parity() * w);
          break;
        }
        case InterpKind::LnStar: {
          const auto orb = orbit(j);
          const double w = double(weight_lambda(j, n)) / double(orb.size());
          for (const auto& i : orb) add(i, w);
          break;
        }
      }
    }
    begin_.push_back(shifts_.size());
  }

  InterpKind kind() const { return kind_; }
  int degree() const { return n_; }
  const std::vector<HIndex>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  /// The kernel underlying every fundamental function.
  complex kernel(const HomoPoint& t) const {
    switch (kind_) {
      case InterpKind::In: return phi_n_fund(n_, t);
      case InterpKind::InStar:
      case InterpKind::LnStar: return phi_n_star(n_, t);
      case InterpKind::Ln: return dirichlet(n_ - 1, t);
    }
    return 0;
  }

  /// Fundamental function of node i at t.
  complex operator()(std::size_t i, const HomoPoint& t) const {
    complex s = 0;
    for (std::size_t r = begin_[i]; r < begin_[i + 1]; ++r) s += weight_[r] * kernel(t - shifts_[r]);
    return s;
  }

  /// Every fundamental function at t, in node order.
  std::vector<complex> all(const HomoPoint& t) const {
    std::vector<complex> out(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) out[i] = (*this)(i, t);
    return out;
  }

 private:
  void add(const HIndex& shift, double w) {
    shifts_.push_back(node_point(shift, n_));
    weight_.push_back(w);
  }

  InterpKind kind_;
  int n_;
  std::vector<HIndex> nodes_;
  std::vector<std::size_t> begin_;
  std::vector<HomoPoint> shifts_;
  std::vector<double> weight_;
};

/// ℓ°_j through the sine basis: (144/n^3) sum_{k in Λ_n°} TS_k(t) conj(TS_k(j/4n)).
inline complex ell_circ_reference(int n, const HIndex& j, const HomoPoint& t) {
  const HomoPoint tj = node_point(j, n);
  complex s = 0;
  for (const auto& k : generate_Lambda_n_circ(n)) s += ts(k, t) * std::conj(ts(k, tj));
  return 144.0 / (double(n) * n * n) * s;
}

/// ℓ△_j through the cosine basis: (λ_j/4n^3) sum_{k in Λ_n} λ_k TC_k(t) conj(TC_k(j/4n)).
inline complex ell_tri_reference(int n, const HIndex& j, const HomoPoint& t) {
  const HomoPoint tj = node_point(j, n);
  complex s = 0;
  for (const auto& node : generate_Lambda_n(n))
    s += double(tetra_weight(node.stratum)) * tc(node.k, t) * std::conj(tc(node.k, tj));
  return double(weight_lambda(j, n)) / (4.0 * n * n * n) * s;
}

/// An interpolation operator applied to fixed node values.
class Interpolant {
 public:
  /// values[i] belongs to basis.nodes()[i].
  Interpolant(FundamentalBasis basis, std::vector<complex> values)
      : basis_(std::move(basis)), values_(std::move(values)) {
    if (values_.size() != basis_.size())
      throw std::invalid_argument("Interpolant: expected " + std::to_string(basis_.size()) +
                                  " node values for " + node_set_name(basis_.kind()) +
                                  " of degree " + std::to_string(basis_.degree()) + ", got " +
                                  std::to_string(values_.size()));
  }

  /// From values keyed by node; the keys must be exactly the node set.
  static Interpolant from_node_values(InterpKind kind, int n, const std::map<HIndex, complex>& v) {
    FundamentalBasis basis(kind, n);
    const std::string where = node_set_name(kind) + " of degree " + std::to_string(n);
    if (v.size() != basis.size())
      throw std::invalid_argument("expected " + std::to_string(basis.size()) +
                                  " node values for " + where + ", got " +
                                  std::to_string(v.size()));
    std::vector<complex> values;
    values.reserve(basis.size());
    for (const auto& j : basis.nodes()) {
      const auto it = v.find(j);
      if (it == v.end())
        throw std::invalid_argument("missing value for node " + to_string(j) + " of " + where);
      values.push_back(it->second);
    }
    return Interpolant(std::move(basis), std::move(values));
  }

  InterpKind kind() const { return basis_.kind(); }
  int degree() const { return basis_.degree(); }
  const std::vector<HIndex>& nodes() const { return basis_.nodes(); }
  const std::vector<complex>& values() const { return values_; }
  const FundamentalBasis& basis() const { return basis_; }

  complex operator()(const HomoPoint& t) const {
    std::vector<complex> terms(values_.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
      terms[i] = values_[i] * basis_(i, t);
    return pairwise_sum(terms);
  }

 private:
  FundamentalBasis basis_;
  std::vector<complex> values_;
};

/// Sample f at the nodes of the operator and build the interpolant.
template <class F>
Interpolant interpolate(InterpKind kind, F&& f, int n) {
  FundamentalBasis basis(kind, n);
  auto values = parallel_map(basis.size(), [&](std::size_t i) {
    return complex(f(node_point(basis.nodes()[i], n)));
  });
  return Interpolant(std::move(basis), std::move(values));
}

template <class F>
Interpolant interp_In(F&& f, int n) { return interpolate(InterpKind::In, f, n); }
template <class F>
Interpolant interp_In_star(F&& f, int n) { return interpolate(InterpKind::InStar, f, n); }
template <class F>
Interpolant interp_Ln(F&& f, int n) { return interpolate(InterpKind::Ln, f, n); }
template <class F>
Interpolant interp_Ln_star(F&& f, int n) { return interpolate(InterpKind::LnStar, f, n); }

/// sum over nodes of |fundamental function at t|.
inline double lebesgue_function(const FundamentalBasis& basis, const HomoPoint& t) {
  std::vector<double> terms(basis.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = std::abs(basis(i, t));
  return pairwise_sum(terms);
}

/// Default points per axis of the Lebesgue scan.
inline constexpr int kDefaultLebesgueGrid = 25;

/**
 * Maximum of the Lebesgue function over a grid: the closed dodecahedron for
 * In, and the closed tetrahedron for the S4-invariant kinds, where the
 * maximum over the dodecahedron is already attained.  A lower estimate of
 * the operator norm.
 */
inline double lebesgue_interp(int n, InterpKind kind, int grid_per_axis = kDefaultLebesgueGrid) {
  const FundamentalBasis basis(kind, n);
  const auto grid = kind == InterpKind::In ? dodeca_grid(grid_per_axis) : tetra_grid(grid_per_axis);
  const auto values =
      parallel_map(grid.size(), [&](std::size_t i) { return lebesgue_function(basis, grid[i]); });
  return *std::max_element(values.begin(), values.end());
}

}  // namespace fcc
