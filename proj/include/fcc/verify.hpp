/**
 * \file verify.hpp
 * \brief Self-check of the exact identities at one degree.
 *
 * Each check evaluates an identity that holds exactly in theory and reports
 * the worst deviation seen.  Sampled checks use a fixed seed, so a run is
 * reproducible.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fcc/boundary.hpp"
#include "fcc/index_sets.hpp"
#include "fcc/interpolation.hpp"
#include "fcc/kernels.hpp"
#include "fcc/transforms.hpp"
#include "fcc/trig_basis.hpp"

namespace fcc {

struct CheckResult {
  std::string name;
  bool passed;
  double error;      // worst deviation, 0 for exact integer checks
  double tolerance;  // 0 for exact checks
};

namespace detail {

inline HomoPoint random_point(std::mt19937_64& rng, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  return HomoPoint(u(rng), u(rng), u(rng), u(rng));
}

template <class T>
std::vector<T> sample(const std::vector<T>& v, std::size_t count, std::mt19937_64& rng) {
  if (v.size() <= count) return v;
  std::vector<T> out;
  std::sample(v.begin(), v.end(), std::back_inserter(out), count, rng);
  return out;
}

inline CheckResult exact(std::string name, bool ok) { return {std::move(name), ok, ok ? 0.0 : 1.0, 0.0}; }

inline CheckResult within(std::string name, double err, double tol) {
  return {std::move(name), err < tol, err, tol};
}

}  // namespace detail

/// Run every check at degree n (n >= 1).
inline std::vector<CheckResult> run_verification(int n, std::uint64_t seed = 20240611) {
  detail::require_degree(n, "run_verification");
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;

  // Cardinalities.
  const auto hn = generate_Hn(n), hstar = generate_Hn_star(n), hcirc = generate_Hn_circ(n);
  const auto lambda = generate_Lambda_n(n);
  const long p4 = std::lround(std::pow(n + 1, 4)), n4 = std::lround(std::pow(n, 4)),
             m4 = std::lround(std::pow(n - 1, 4));
  out.push_back(detail::exact("|H_n| = 4n^3", long(hn.size()) == 4L * n * n * n));
  out.push_back(detail::exact("|H_n*| = (n+1)^4 - n^4", long(hstar.size()) == p4 - n4));
  out.push_back(detail::exact("|H_n°| = n^4 - (n-1)^4", long(hcirc.size()) == n4 - m4));
  out.push_back(
      detail::exact("|Lambda_n| = binom(n+3,3)", long(lambda.size()) == long(n + 3) * (n + 2) * (n + 1) / 6));
  {
    bool ok = true;
    const int pairs[6][2] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}};
    for (const auto& p : pairs) {
      long count = 0;
      for (const auto& k : hstar)
        if (stratum_of_index(k, n) == StratumLabel{p[0], p[1]}) ++count;
      const int rest = 4 - p[0] - p[1];
      long f[5] = {1, 1, 2, 6, 24};
      const long expected = 24 / (f[p[0]] * f[p[1]] * f[rest]) * std::lround(std::pow(n - 1, rest));
      ok = ok && count == expected;
    }
    out.push_back(detail::exact("boundary stratum counts", ok));
  }

  // Weights.
  {
    Rational sc = 0;
    for (const auto& k : hstar) sc += weight_c(k, n);
    long sl = 0;
    for (const auto& node : lambda) sl += tetra_weight(node.stratum);
    out.push_back(detail::exact("sum of c weights = 4n^3", sc == Rational(4L * n * n * n)));
    out.push_back(detail::exact("sum of lambda weights = 4n^3", sl == 4L * n * n * n));
  }

  // Discrete orthonormality over H_n.
  {
    double err = 0;
    const auto ks = detail::sample(hn, 24, rng);
    for (const auto& k : ks)
      for (const auto& j : ks) {
        const auto fk = [&](const HomoPoint& t) { return phi(k, t); };
        const auto fj = [&](const HomoPoint& t) { return phi(j, t); };
        const double delta = k == j ? 1.0 : 0.0;
        err = std::max(err, std::abs(inner_n(fk, fj, n) - delta));
        err = std::max(err, std::abs(inner_n_star(fk, fj, n) - delta));
      }
    out.push_back(detail::within("discrete orthonormality of phi_k on H_n", err, 1e-10));
  }

  // Cubature exactness.
  {
    double err = 0;
    for (const auto& m : detail::sample(generate_Hn_star(2 * n - 1), 150, rng)) {
      const auto f = [&](const HomoPoint& t) { return phi(m, t); };
      err = std::max(err, std::abs(cubature_dodeca(f, n) - (m.is_zero() ? 1.0 : 0.0)));
    }
    out.push_back(detail::within("dodecahedral cubature exact on T_{2n-1}", err, 1e-10));
    double err_t = 0;
    for (const auto& node : detail::sample(generate_Lambda_n(2 * n - 1), 150, rng)) {
      const auto f = [&](const HomoPoint& t) { return tc(node.k, t); };
      err_t = std::max(err_t, std::abs(cubature_tetra(f, n) - (node.k.is_zero() ? 1.0 : 0.0)));
    }
    out.push_back(detail::within("tetrahedral cubature exact on TC_{2n-1}", err_t, 1e-10));
  }

  // Compact kernels against direct sums.
  for (const auto& kp : kernel_pairs()) {
    double err = 0;
    for (int i = 0; i < 20; ++i) {
      const HomoPoint t = detail::random_point(rng);
      err = std::max(err, std::abs(kp.fast(n, t) - kp.reference(n, t)));
    }
    out.push_back(detail::within("kernel " + kp.name + ": compact = direct", err, 1e-9));
  }

  // Generalized cosine and sine.
  {
    double err_c = 0, err_s = 0;
    for (const auto& node : detail::sample(lambda, 20, rng))
      for (int i = 0; i < 5; ++i) {
        const HomoPoint t = detail::random_point(rng);
        err_c = std::max(err_c, std::abs(tc(node.k, t) - tc_orbit(node.k, t)));
      }
    // Strictly decreasing indices first appear at degree 4.
    for (const auto& k : detail::sample(generate_Lambda_n_circ(std::max(n, 4)), 20, rng))
      for (int i = 0; i < 5; ++i) {
        const HomoPoint t = detail::random_point(rng);
        err_s = std::max(err_s, std::abs(ts(k, t) - ts_orbit(k, t)));
      }
    out.push_back(detail::within("TC compact = orbit average", err_c, 1e-10));
    out.push_back(detail::within("TS compact = antisymmetrization", err_s, 1e-10));

    double err_o = 0;
    for (const auto& k : lambda)
      for (const auto& j : lambda) {
        const auto v = inner_tetra([&](const HomoPoint& t) { return tc(k.k, t); },
                                   [&](const HomoPoint& t) { return tc(j.k, t); }, n);
        const double expected = k.k == j.k ? 1.0 / tetra_weight(k.stratum) : 0.0;
        err_o = std::max(err_o, std::abs(v - expected));
      }
    out.push_back(detail::within("discrete orthogonality of TC on Lambda_n", err_o, 1e-10));
  }

  // Interpolation conditions.
  for (const auto kind : {InterpKind::In, InterpKind::InStar, InterpKind::LnStar, InterpKind::Ln}) {
    // Interior tetrahedral nodes first exist at degree 4.
    const int m = kind == InterpKind::Ln ? std::max(n, 4) : n;
    const FundamentalBasis basis(kind, m);
    double err = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const HomoPoint t = node_point(basis.nodes()[j], m);
        double expected = i == j ? 1.0 : 0.0;
        if (kind == InterpKind::InStar) {
          // A boundary node sees every node congruent to it.
          const auto cls = congruent_orbit_index(basis.nodes()[j], m);
          expected = std::binary_search(cls.begin(), cls.end(), basis.nodes()[i]) ? 1.0 : 0.0;
        }
        err = std::max(err, std::abs(basis(i, t) - expected));
      }
    out.push_back(detail::within("interpolation condition " + to_string(kind) + " (" +
                                     std::to_string(basis.size()) + " nodes at n = " + std::to_string(m) + ")",
                                 err, 1e-9));
  }

  // Continuous oracle.
  {
    double err = 0;
    const int q = default_quad_order(n);
    for (const auto& k : detail::sample(hstar, 6, rng))
      for (const auto& j : detail::sample(hstar, 6, rng)) {
        const auto v = continuous_inner([&](const HomoPoint& t) { return phi(k, t); },
                                        [&](const HomoPoint& t) { return phi(j, t); }, q);
        err = std::max(err, std::abs(v - (k == j ? 1.0 : 0.0)));
      }
    out.push_back(detail::within("continuous orthonormality of phi_k", err, 1e-8));
  }
  return out;
}

}  // namespace fcc
