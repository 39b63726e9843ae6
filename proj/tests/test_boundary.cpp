#include <algorithm>
#include <cmath>

#include "catch_amalgamated.hpp"
#include "fcc/boundary.hpp"
#include "fcc/index_sets.hpp"
#include "support.hpp"

using namespace fcc;

namespace {

std::uint8_t mask(std::initializer_list<int> one_based) {
  std::uint8_t m = 0;
  for (int i : one_based) m |= static_cast<std::uint8_t>(1u << (i - 1));
  return m;
}

// Every translate t + v, v in {-1,0,1}^4 with zero sum, inside the closed domain.
std::vector<HomoPoint> brute_force_translates(const HomoPoint& t) {
  std::vector<HomoPoint> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        const int d = -(a + b + c);
        if (d < -1 || d > 1) continue;
        const HomoPoint p = test::shift(t, {a, b, c, d});
        if (in_closed_omega_H(p, 1e-10)) out.push_back(p);
      }
  return out;
}

bool same_point_sets(std::vector<HomoPoint> a, std::vector<HomoPoint> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::none_of(b.begin(), b.end(), [&](const HomoPoint& q) { return distance(p, q) < 1e-10; }))
      return false;
  return true;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("classification of reference points", "[boundary]") {
  CHECK(classify(HomoPoint{}).interior());

  const double a = 0.6;
  const auto face = classify(HomoPoint(a, a - 1, a - 1, 2 - 3 * a));
  CHECK(face.I == mask({1}));
  CHECK(face.J == mask({2, 3}));

  const auto corner = classify(HomoPoint(0.75, -0.25, -0.25, -0.25));
  CHECK(corner.I == mask({1}));
  CHECK(corner.J == mask({2, 3, 4}));

  CHECK_THROWS_AS(classify(HomoPoint(1.5, -0.5, -0.5, -0.5)), std::domain_error);
}

TEST_CASE("congruent orbits of reference points", "[boundary]") {
  const HomoPoint inner(0.1, 0.05, -0.05, -0.1);
  CHECK(congruent_orbit(inner).size() == 1);

  const double a = 0.6;
  const HomoPoint t(a, a - 1, a - 1, 2 - 3 * a);
  const auto orb = congruent_orbit(t);
  const std::vector<HomoPoint> expected{t, act(Perm4::transposition(1, 2), t),
                                        act(Perm4::transposition(1, 3), t)};
  CHECK(same_point_sets(orb, expected));

  CHECK(congruent_orbit(HomoPoint(0.5, 0.5, -0.5, -0.5)).size() == 6);
}

TEST_CASE("congruent orbits agree with exhaustive translation search at every node", "[boundary]") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& k : generate_Hn_star(n)) {
      const HomoPoint t = node_point(k, n);
      const auto orb = congruent_orbit(t);
      INFO("n = " << n << ", k = " << to_string(k));
      CHECK(same_point_sets(orb, brute_force_translates(t)));

      // The exact index version names the same points.
      std::vector<HomoPoint> from_index;
      for (const auto& j : congruent_orbit_index(k, n)) from_index.push_back(node_point(j, n));
      CHECK(same_point_sets(orb, from_index));

      const auto c = classify(t);
      CHECK(c == classify_index(k, n));
      CHECK(long(orb.size()) == binom(c.size_I() + c.size_J(), c.size_I()));
    }
}

TEST_CASE("orbit members differ by periods", "[boundary]") {
  for (const auto& k : generate_Hn_star(3)) {
    const auto orb = congruent_orbit(node_point(k, 3));
    for (const auto& p : orb)
      for (const auto& q : orb)
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(p[i] - q[i] - std::round(p[i] - q[i])) < 1e-10);
  }
}

TEST_CASE("classification is equivariant under the group", "[boundary]") {
  for (int trial = 0; trial < 40; ++trial) {
    const double a = test::uniform(0.52, 0.73);
    const HomoPoint t(a, a - 1, a - 1, 2 - 3 * a);
    for (const auto& s : all_perms()) {
      const auto c = classify(t), d = classify(act(s, t));
      CHECK(d.size_I() == c.size_I());
      CHECK(d.size_J() == c.size_J());
      for (int i = 0; i < 4; ++i) {
        CHECK(d.contains_I(i) == c.contains_I(s(i)));
        CHECK(d.contains_J(i) == c.contains_J(s(i)));
      }
    }
  }
}

TEST_CASE("classify_index rejects indices outside H_n*", "[boundary]") {
  CHECK_THROWS_AS(classify_index(HIndex(6, -2, -2, -2), 1), std::domain_error);
  CHECK_THROWS_AS(classify_index(HIndex{}, 0), std::invalid_argument);
}
