#include <cmath>

#include "catch_amalgamated.hpp"
#include "fcc/kernels.hpp"
#include "fcc/symmetry.hpp"
#include "support.hpp"

using namespace fcc;

namespace {

complex K_direct(int n, double t) {
  complex s = 0;
  for (int j = 0; j <= n; ++j) s += std::polar(1.0, 2 * pi * j * t);
  return s;
}

// Sum of w(k) phi_k(t) over H_n*, written out with a plain loop.
template <class W>
complex stratum_sum(int n, const HomoPoint& t, W w) {
  complex s = 0;
  for (const auto& k : generate_Hn_star(n)) s += w(k) * phi(k, t);
  return s;
}

/// A point whose first coordinate lies eps from the integer m.
HomoPoint near_singular(double eps, int m) {
  const double a = m + eps, b = test::uniform(-0.7, 0.7), c = test::uniform(-0.7, 0.7);
  return HomoPoint::unchecked(a, b, c, -(a + b + c));
}

std::vector<HomoPoint> probe_points(int count) {
  std::vector<HomoPoint> out;
  for (int i = 0; i < count; ++i) out.push_back(test::random_point(1.0));
  for (int m = -1; m <= 1; ++m)
    for (double eps : {1e-7, -1e-7, 3e-9, 0.0}) out.push_back(near_singular(eps, m));
  out.push_back(HomoPoint{});
  out.push_back(HomoPoint::unchecked(1e-7, -1e-7, 2e-7, -2e-7));
  return out;
}

bool congruent_mod(const HIndex& a, const HIndex& b, int m) {
  for (std::size_t i = 0; i < 4; ++i)
    if ((a[i] - b[i]) % m != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("one-dimensional kernel K_n", "[kernels]") {
  for (int n : {0, 1, 2, 5, 17, 64}) {
    CHECK(std::abs(K_n(n, 0.0) - double(n + 1)) < 1e-12);
    // The phase e^{i pi n t} loses a few ulps at large arguments.
    CHECK(std::abs(K_n(n, 3.0) - double(n + 1)) < 1e-13 * (n + 1) * (n + 1));
    CHECK(std::abs(K_n(n, -2.0) - double(n + 1)) < 1e-13 * (n + 1) * (n + 1));
    for (int i = 0; i < 200; ++i) {
      const double t = test::uniform(-2, 2);
      const complex ref = K_direct(n, t);
      CHECK(std::abs(K_n(n, t) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
    }
  }
  CHECK_THROWS_AS(K_n(-1, 0.3), std::invalid_argument);
}

TEST_CASE("theta_n", "[kernels]") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(theta_n(n, HomoPoint{}) == Catch::Approx(std::pow(n, 4)));
    for (int i = 0; i < 100; ++i) {
      const HomoPoint t = test::random_point(0.7);
      const complex ref = stratum_sum(n, t, [](const HIndex&) { return 1.0; });
      const double diff = theta_n(n + 1, t) - theta_n(n, t);
      CHECK(std::abs(diff - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
  SECTION("continuity across the removable singularity") {
    for (int n = 1; n <= 5; ++n)
      for (int m = -1; m <= 1; ++m) {
        const double b = test::uniform(-0.7, 0.7), c = test::uniform(-0.7, 0.7);
        const auto at = [&](double eps) {
          const double a = m + eps;
          return theta_n(n, HomoPoint::unchecked(a, b, c, -(a + b + c)));
        };
        // The symmetric offset average cancels the first-order change that
        // the compensating t4 picks up.
        const double off = 0.5 * (at(1e-5) + at(-1e-5));
        for (double eps : {1e-7, -1e-7, 0.0})
          CHECK(std::abs(at(eps) - off) <= 1e-4 * std::max(1.0, std::abs(off)));
      }
  }
}

TEST_CASE("Dirichlet kernel", "[kernels]") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(dirichlet(n, HomoPoint{}) == Catch::Approx(std::pow(n + 1, 4) - std::pow(n, 4)));
    for (const auto& t : probe_points(100)) {
      const complex ref = stratum_sum(n, t, [](const HIndex&) { return 1.0; });
      CHECK(std::abs(dirichlet(n, t) - ref) < 1e-9);
      CHECK(std::abs(dirichlet_product(n, t) - ref) < 1e-9);
      CHECK(std::abs(dirichlet_direct(n, t).imag()) < 1e-9);
    }
  }
  for (int i = 0; i < 20; ++i) {
    const HomoPoint t = test::random_point();
    CHECK(dirichlet(0, t) == 1.0);
    CHECK(std::abs(dirichlet_direct(0, t) - 1.0) < 1e-15);
    CHECK(std::abs(dirichlet_product(0, t) - 1.0) < 1e-12);
    CHECK(theta_n(0, t) == 0.0);
  }
}

TEST_CASE("Dirichlet kernel symmetries", "[kernels]") {
  for (int i = 0; i < 20; ++i) {
    const HomoPoint t = test::random_point();
    const int n = test::uniform_int(1, 5);
    const double d = dirichlet(n, t);
    for (const auto& s : all_perms()) CHECK(std::abs(dirichlet(n, act(s, t)) - d) < 1e-9);
    const auto v = test::random_period(2);
    CHECK(std::abs(dirichlet(n, test::shift(t, v)) - d) < 1e-9);
    CHECK(std::abs(phi_n_star(n, test::shift(t, v)) - phi_n_star(n, t)) < 1e-9);
    CHECK(std::abs(phi_n_fund(n, test::shift(t, v)) - phi_n_fund(n, t)) < 1e-9);
  }
}

TEST_CASE("edge sub-kernel equals the edge strata sum", "[kernels]") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : probe_points(50)) {
      const complex ref = stratum_sum(n, t, [n](const HIndex& k) {
        const auto s = stratum_of_index(k, n);
        return s.i + s.j == 3 ? 1.0 : 0.0;
      });
      CHECK(std::abs(edge_kernel(n, t) - ref) < 1e-9);
    }
}

TEST_CASE("symmetric interpolation kernel", "[kernels]") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(phi_n_star(n, HomoPoint{}) == Catch::Approx(1.0));
    for (const auto& t : probe_points(100)) {
      const complex ref = stratum_sum(n, t, [n](const HIndex& k) {
                            return boost::rational_cast<double>(weight_c(k, n));
                          }) /
                          (4.0 * n * n * n);
      CHECK(std::abs(phi_n_star(n, t) - ref) < 1e-9);
      CHECK(std::abs(phi_n_star_direct(n, t).imag()) < 1e-9);
    }
  }
  SECTION("values at node differences") {
    for (int n = 1; n <= 3; ++n) {
      const auto star = generate_Hn_star(n);
      for (const auto& k : star)
        for (const auto& j : star) {
          const double expected = congruent_mod(k, j, 4 * n) ? 1.0 : 0.0;
          CHECK(std::abs(phi_n_star(n, node_point(k, n) - node_point(j, n)) - expected) < 1e-9);
        }
    }
  }
}

TEST_CASE("dodecahedral interpolation kernel", "[kernels]") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(std::abs(phi_n_fund(n, HomoPoint{}) - 1.0) < 1e-12);
    for (const auto& j : generate_Hn(n)) {
      const double expected = j.is_zero() ? 1.0 : 0.0;
      CHECK(std::abs(phi_n_fund(n, node_point(j, n)) - expected) < 1e-9);
    }
    for (const auto& t : probe_points(50)) {
      complex ref = 0;
      for (const auto& k : generate_Hn(n)) ref += phi(k, t);
      ref /= 4.0 * n * n * n;
      CHECK(std::abs(phi_n_fund(n, t) - ref) < 1e-9);
    }
  }
}

TEST_CASE("registered kernel pairs agree", "[kernels]") {
  for (const auto& kp : kernel_pairs())
    for (int n = std::max(kp.min_degree, 1); n <= 4; ++n)
      for (const auto& t : probe_points(10)) {
        INFO(kp.name << " n = " << n);
        CHECK(std::abs(kp.fast(n, t) - kp.reference(n, t)) < 1e-9);
      }
  CHECK_THROWS_AS(phi_n_star(0, HomoPoint{}), std::invalid_argument);
}
