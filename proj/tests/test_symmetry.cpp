#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"
#include "fcc/symmetry.hpp"
#include "fcc/trig_basis.hpp"
#include "support.hpp"

using namespace fcc;

namespace {

Perm4 s(int i, int j) { return Perm4::transposition(i, j); }

// Inversions counted straight from the definition, one-based.
int count_inversions(const Perm4& p) {
  int c = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) c += p(i - 1) > p(j - 1);
  return c;
}

}  // namespace

TEST_CASE("group size and parity classes", "[symmetry]") {
  std::set<Perm4> all(all_perms().begin(), all_perms().end());
  CHECK(all.size() == 24);
  CHECK(even_perms().size() == 12);
  CHECK(odd_perms().size() == 12);
  for (const auto& p : even_perms()) CHECK(count_inversions(p) % 2 == 0);
  for (const auto& p : odd_perms()) CHECK(count_inversions(p) % 2 == 1);
}

TEST_CASE("parity classes match the explicit rosters", "[symmetry]") {
  const std::set<Perm4> even{Perm4{},           s(1, 2) * s(1, 3), s(1, 3) * s(1, 2), s(1, 2) * s(1, 4),
                             s(1, 4) * s(1, 2), s(1, 3) * s(1, 4), s(1, 4) * s(1, 3), s(2, 3) * s(2, 4),
                             s(2, 4) * s(2, 3), s(1, 2) * s(3, 4), s(1, 3) * s(2, 4), s(1, 4) * s(2, 3)};
  const std::set<Perm4> odd{s(1, 2),
                            s(1, 3),
                            s(1, 4),
                            s(2, 3),
                            s(2, 4),
                            s(3, 4),
                            s(1, 2) * s(1, 3) * s(1, 4),
                            s(1, 2) * s(1, 4) * s(1, 3),
                            s(1, 3) * s(1, 2) * s(1, 4),
                            s(1, 3) * s(1, 4) * s(1, 2),
                            s(1, 4) * s(1, 2) * s(1, 3),
                            s(1, 4) * s(1, 3) * s(1, 2)};
  CHECK(even == std::set<Perm4>(even_perms().begin(), even_perms().end()));
  CHECK(odd == std::set<Perm4>(odd_perms().begin(), odd_perms().end()));
}

TEST_CASE("group identities", "[symmetry]") {
  for (const auto& a : all_perms())
    for (const auto& b : all_perms()) {
      // |ab| + |b| = |a| mod 2
      CHECK((count_inversions(a * b) + count_inversions(b) - count_inversions(a)) % 2 == 0);
      CHECK(all_perms()[composition_table()[perm_index(a)][perm_index(b)]] == a * b);
    }
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        if (i == j || j == k || i == k) continue;
        CHECK(s(i, j) * s(j, k) * s(i, j) == s(i, k));
        CHECK(s(i, j) * s(i, j) == Perm4{});
      }
  for (const auto& a : all_perms()) CHECK(a * a.inverse() == Perm4{});
}

TEST_CASE("action on points and indices", "[symmetry]") {
  const HomoPoint t(0.4, -0.1, 0.2, -0.5);
  CHECK(act(Perm4{}, t) == t);
  const HomoPoint u = act(s(1, 2), t);
  CHECK(u[0] == t[1]);
  CHECK(u[1] == t[0]);
  CHECK(u[2] == t[2]);
  CHECK(u[3] == t[3]);
  CHECK(act(s(1, 2), HIndex(5, 1, -3, -3)) == HIndex(1, 5, -3, -3));

  for (int trial = 0; trial < 50; ++trial) {
    const HomoPoint p = test::random_point();
    const auto& a = all_perms()[test::uniform_int(0, 23)];
    const auto& b = all_perms()[test::uniform_int(0, 23)];
    CHECK(act(b, act(a, p)) == act(a * b, p));
    const HIndex k = test::random_index(3);
    CHECK(act(b, act(a, k)) == act(a * b, k));
  }
}

TEST_CASE("orbits and stabilizers", "[symmetry]") {
  CHECK(orbit(HIndex(5, 1, -3, -3)).size() == 12);
  CHECK(orbit(HIndex(9, 5, -3, -11)).size() == 24);
  for (int k = 1; k <= 3; ++k) {
    CHECK(orbit(HIndex(2 * k, 2 * k, -2 * k, -2 * k)).size() == 6);
    CHECK(orbit(HIndex(k, k, k, -3 * k)).size() == 4);
  }
  CHECK(orbit(HIndex{}).size() == 1);
  for (int trial = 0; trial < 50; ++trial) {
    const HIndex k = test::random_index(2);
    CHECK(orbit(k).size() * stabilizer_size(k) == 24);
  }
}

TEST_CASE("symmetrizing projections", "[symmetry]") {
  const auto invariant = [](const HomoPoint& t) {
    return complex(std::cos(t[0]) + std::cos(t[1]) + std::cos(t[2]) + std::cos(t[3]));
  };
  const auto skewed = [](const HomoPoint& t) { return complex(t[0] + 2 * t[1] * t[1] - std::sin(3 * t[2]), t[3]); };
  for (int trial = 0; trial < 20; ++trial) {
    const HomoPoint t = test::random_point();
    CHECK(std::abs(project_plus(invariant, t) - invariant(t)) < 1e-14);
    CHECK(std::abs(project_minus(invariant, t)) < 1e-14);

    const auto plus = [&](const HomoPoint& u) { return project_plus(skewed, u); };
    const auto minus = [&](const HomoPoint& u) { return project_minus(skewed, u); };
    CHECK(std::abs(project_plus(plus, t) - plus(t)) < 1e-14);
    CHECK(std::abs(project_minus(minus, t) - minus(t)) < 1e-14);
    CHECK(std::abs(project_plus(minus, t)) < 1e-14);

    const HIndex k = test::random_index(3);
    const auto ph = [&](const HomoPoint& u) { return phi(k, u); };
    CHECK(std::abs(project_plus(ph, t) - tc_orbit(k, t)) < 1e-14);

    // Sorted into decreasing order, the compact forms apply.
    auto c = k.coords();
    std::sort(c.rbegin(), c.rend());
    const HIndex ordered(c);
    const auto po = [&](const HomoPoint& u) { return phi(ordered, u); };
    CHECK(std::abs(project_plus(po, t) - tc(ordered, t)) < 1e-12);
    if (c[0] > c[1] && c[1] > c[2] && c[2] > c[3]) CHECK(std::abs(-project_minus(po, t) - ts(ordered, t)) < 1e-12);
  }
}
