#include <cmath>

#include "catch_amalgamated.hpp"
#include "fcc/lattice.hpp"
#include "support.hpp"

using namespace fcc;
using Catch::Matchers::WithinAbs;

namespace {

bool near_integer(double v, double tol = 1e-9) { return std::abs(v - std::round(v)) < tol; }

void require_point(const HomoPoint& t, double a, double b, double c, double d) {
  CHECK_THAT(t[0], WithinAbs(a, 1e-15));
  CHECK_THAT(t[1], WithinAbs(b, 1e-15));
  CHECK_THAT(t[2], WithinAbs(c, 1e-15));
  CHECK_THAT(t[3], WithinAbs(d, 1e-15));
}

}  // namespace

TEST_CASE("stored matrices satisfy U^T U = I and A = U^T H", "[lattice]") {
  using L = LatticeConstants;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double utu = 0, uth = 0;
      for (std::size_t r = 0; r < 4; ++r) {
        utu += L::U(r, i) * L::U(r, j);
        uth += L::U(r, i) * L::H[r][j];
      }
      CHECK(utu == (i == j ? 1.0 : 0.0));
      CHECK(uth == L::A[i][j]);
    }
  CHECK(L::det_A() == 2);
}

TEST_CASE("to_homogeneous on reference points", "[lattice]") {
  require_point(to_homogeneous({0, 0, 0}), 0, 0, 0, 0);
  require_point(to_homogeneous({1, 0, 0}), -0.5, 0.5, 0.5, -0.5);
}

TEST_CASE("from_homogeneous on reference points", "[lattice]") {
  const auto a = from_homogeneous(HomoPoint(0.75, -0.25, -0.25, -0.25));
  CHECK(a == Point3{-0.5, 0.5, 0.5});
  const auto b = from_homogeneous(HomoPoint(0.25, 0.25, 0.25, -0.75));
  CHECK(b == Point3{0.5, 0.5, 0.5});
  CHECK(from_homogeneous(HomoPoint{}) == Point3{0, 0, 0});
}

TEST_CASE("coordinate maps round-trip", "[lattice]") {
  for (int i = 0; i < 100; ++i) {
    const Point3 x{test::uniform(-3, 3), test::uniform(-3, 3), test::uniform(-3, 3)};
    const Point3 y = from_homogeneous(to_homogeneous(x));
    for (std::size_t c = 0; c < 3; ++c) CHECK_THAT(y[c], WithinAbs(x[c], 1e-12));
  }
}

TEST_CASE("homogeneous points are projected to zero sum", "[lattice]") {
  const HomoPoint t(1, 2, 3, 4);
  CHECK_THAT(t[0] + t[1] + t[2] + t[3], WithinAbs(0, 1e-15));
  CHECK_THAT(t[0], WithinAbs(-1.5, 1e-15));
}

TEST_CASE("H index membership", "[lattice]") {
  CHECK(is_h_index({0, 0, 0, 0}));
  CHECK(is_h_index({3, -1, -1, -1}));
  CHECK(is_h_index({5, 1, -3, -3}));
  CHECK_FALSE(is_h_index({1, -1, 0, 0}));  // zero sum, wrong residues
  CHECK_FALSE(is_h_index({4, 0, 0, 0}));   // right residues, nonzero sum
  CHECK_THROWS_AS(HIndex(1, -1, 0, 0), std::invalid_argument);
  CHECK(HIndex(3, -1, -1, -1).spread() == 4);
}

TEST_CASE("half-open domain membership", "[lattice]") {
  CHECK(in_omega_H(HomoPoint{}));
  CHECK(in_omega_H(HomoPoint(0.75, -0.25, -0.25, -0.25)));
  CHECK_FALSE(in_omega_H(HomoPoint(-0.75, 0.25, 0.25, 0.25)));
  CHECK(in_omega_H(HomoPoint(0.5, 0.5, -0.5, -0.5)));
  CHECK_FALSE(in_omega_H(HomoPoint(-0.5, -0.5, 0.5, 0.5)));
  CHECK(in_closed_omega_H(HomoPoint(-0.5, -0.5, 0.5, 0.5)));
  CHECK_FALSE(in_closed_omega_H(HomoPoint(0.9, -0.2, -0.2, -0.5)));
}

TEST_CASE("folding into the fundamental domain", "[lattice]") {
  SECTION("points of the domain are fixed") {
    for (int i = 0; i < 200; ++i) {
      const HomoPoint t = test::random_point(0.3);
      REQUIRE(in_omega_H(t));
      CHECK(distance(fold_to_omega_H(t), t) < 1e-12);
    }
  }
  SECTION("a period e_12 is removed") {
    const HomoPoint t(0.1, -0.05, 0.02, -0.07);
    CHECK(distance(fold_to_omega_H(test::shift(t, {1, -1, 0, 0})), t) < 1e-12);
  }
  SECTION("random points land in the domain, an integer period away") {
    for (int i = 0; i < 1000; ++i) {
      const HomoPoint t = test::random_point(5.0);
      const HomoPoint f = fold_to_omega_H(t);
      CHECK(in_omega_H(f));
      for (std::size_t c = 0; c < 4; ++c) CHECK(near_integer(t[c] - f[c]));
      CHECK(distance(fold_to_omega_H(f), f) < 1e-12);
    }
  }
  SECTION("translation invariance") {
    for (int i = 0; i < 300; ++i) {
      const HomoPoint t = test::random_point(2.0);
      const auto v = test::random_period(4);
      CHECK(distance(fold_to_omega_H(test::shift(t, v)), fold_to_omega_H(t)) < 1e-10);
    }
  }
}

TEST_CASE("exponentials phi_k", "[lattice]") {
  for (int i = 0; i < 100; ++i) {
    const HomoPoint t = test::random_point(2.0);
    const HIndex k = test::random_index(4), m = test::random_index(4);
    CHECK(std::abs(phi(HIndex{}, t) - 1.0) < 1e-15);
    CHECK(std::abs(phi(k, test::shift(t, test::random_period(3))) - phi(k, t)) < 1e-10);
    CHECK(std::abs(phi(k, t) * phi(m, t) - phi(k + m, t)) < 1e-12);
  }
}
