/**
 * \file symmetry.hpp
 * \brief The group S4 acting on homogeneous points and indices.
 *
 * A permutation acts from the right by (t sigma)_i = t_{sigma(i)}.  With the
 * product (sigma tau)(i) = sigma(tau(i)) this is a right action:
 * (t sigma) tau = t (sigma tau).
 */
#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fcc/lattice.hpp"

namespace fcc {

class Perm4 {
 public:
  /// Identity.
  constexpr Perm4() : img_{0, 1, 2, 3} {}

  /// From zero-based images sigma(0..3); throws unless a permutation.
  constexpr explicit Perm4(const std::array<int, 4>& images) : img_(images) {
    std::array<bool, 4> seen{};
    for (int v : img_) {
      if (v < 0 || v > 3 || seen[v]) throw std::invalid_argument("not a permutation of {0,1,2,3}");
      seen[v] = true;
    }
  }

  /// The transposition of positions i and j (one-based, as in sigma_ij).
  static constexpr Perm4 transposition(int i, int j) {
    std::array<int, 4> a{0, 1, 2, 3};
    std::swap(a[i - 1], a[j - 1]);
    return Perm4(a);
  }

  constexpr int operator()(int i) const { return img_[i]; }
  constexpr const std::array<int, 4>& images() const { return img_; }

  constexpr int inversions() const {
    int c = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (img_[i] > img_[j]) ++c;
    return c;
  }
  /// +1 for even, -1 for odd.
  constexpr int parity() const { return inversions() % 2 == 0 ? 1 : -1; }

  /// (sigma tau)(i) = sigma(tau(i)).
  friend constexpr Perm4 operator*(const Perm4& s, const Perm4& t) {
    return Perm4(std::array<int, 4>{s(t(0)), s(t(1)), s(t(2)), s(t(3))});
  }
  constexpr Perm4 inverse() const {
    std::array<int, 4> a{};
    for (int i = 0; i < 4; ++i) a[img_[i]] = i;
    return Perm4(a);
  }
  friend constexpr bool operator==(const Perm4&, const Perm4&) = default;
  friend constexpr auto operator<=>(const Perm4&, const Perm4&) = default;

 private:
  std::array<int, 4> img_;
};

inline HomoPoint act(const Perm4& s, const HomoPoint& t) {
  return HomoPoint::unchecked(t[s(0)], t[s(1)], t[s(2)], t[s(3)]);
}

inline HIndex act(const Perm4& s, const HIndex& k) {
  return HIndex(k[s(0)], k[s(1)], k[s(2)], k[s(3)]);
}

/// The 24 elements in lexicographic order of their images.
inline const std::array<Perm4, 24>& all_perms() {
  static const std::array<Perm4, 24> table = [] {
    std::array<Perm4, 24> out;
    std::array<int, 4> a{0, 1, 2, 3};
    std::size_t i = 0;
    do out[i++] = Perm4(a);
    while (std::next_permutation(a.begin(), a.end()));
    return out;
  }();
  return table;
}

namespace detail {

inline std::array<Perm4, 12> parity_class(int parity) {
  std::array<Perm4, 12> out;
  std::size_t i = 0;
  for (const auto& s : all_perms())
    if (s.parity() == parity) out[i++] = s;
  return out;
}

}  // namespace detail

inline const std::array<Perm4, 12>& even_perms() {
  static const auto table = detail::parity_class(1);
  return table;
}

inline const std::array<Perm4, 12>& odd_perms() {
  static const auto table = detail::parity_class(-1);
  return table;
}

/// Index of s in all_perms().
inline std::size_t perm_index(const Perm4& s) {
  const auto& all = all_perms();
  return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
}

/// composition_table()[a][b] = index of all_perms()[a] * all_perms()[b].
inline const std::array<std::array<unsigned char, 24>, 24>& composition_table() {
  static const auto table = [] {
    std::array<std::array<unsigned char, 24>, 24> out{};
    const auto& all = all_perms();
    for (std::size_t a = 0; a < 24; ++a)
      for (std::size_t b = 0; b < 24; ++b)
        out[a][b] = static_cast<unsigned char>(perm_index(all[a] * all[b]));
    return out;
  }();
  return table;
}

/// The orbit kG, deduplicated and sorted.
inline std::vector<HIndex> orbit(const HIndex& k) {
  std::vector<HIndex> out;
  out.reserve(24);
  for (const auto& s : all_perms()) out.push_back(act(s, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Number of permutations fixing k.
inline int stabilizer_size(const HIndex& k) {
  int c = 0;
  for (const auto& s : all_perms())
    if (act(s, k) == k) ++c;
  return c;
}

/// P+ f(t) = (1/24) sum over all sigma of f(t sigma).
template <class F>
complex project_plus(F&& f, const HomoPoint& t) {
  complex s = 0;
  for (const auto& p : all_perms()) s += complex(f(act(p, t)));
  return s / 24.0;
}

/// P- f(t) = (1/24) sum over all sigma of parity(sigma) f(t sigma).
template <class F>
complex project_minus(F&& f, const HomoPoint& t) {
  complex s = 0;
  for (const auto& p : all_perms()) s += static_cast<double>(p.parity()) * complex(f(act(p, t)));
  return s / 24.0;
}

}  // namespace fcc
