/**
 * \file probes.hpp
 * \brief Named test functions shared by the command line tool and the tests.
 */
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcc/lattice.hpp"
#include "fcc/transforms.hpp"
#include "fcc/trig_basis.hpp"

namespace fcc {

struct ProbeInfo {
  std::string name;
  bool needs_index;
  std::string description;
};

inline const std::vector<ProbeInfo>& builtin_probes() {
  static const std::vector<ProbeInfo> probes{
      {"one", false, "the constant 1"},
      {"phi", true, "exponential phi_k"},
      {"tc", true, "generalized cosine TC_k (k1 >= k2 >= k3 >= k4)"},
      {"ts", true, "generalized sine TS_k (k strictly decreasing)"},
      {"expsin", false, "symmetrized exp(sin 2 pi t1): mean over j of exp(sin 2 pi t_j)"},
      {"expsin1", false, "exp(sin 2 pi t1), periodic but not symmetric"},
      {"sinprod", false, "product over i<j of sin(pi (t_i - t_j)), antisymmetric"},
  };
  return probes;
}

/// The probe called name; k is required by phi, tc and ts.
inline SampleFunction builtin_function(const std::string& name, std::optional<HIndex> k = {}) {
  const auto need_k = [&]() -> HIndex {
    if (!k) throw std::invalid_argument("function '" + name + "' needs an index k");
    return *k;
  };
  if (name == "one") return [](const HomoPoint&) { return complex(1.0); };
  if (name == "phi") return [k = need_k()](const HomoPoint& t) { return phi(k, t); };
  if (name == "tc") {
    const HIndex kk = need_k();
    tc(kk, HomoPoint{});  // validates the ordering up front
    return [kk](const HomoPoint& t) { return tc(kk, t); };
  }
  if (name == "ts") {
    const HIndex kk = need_k();
    ts(kk, HomoPoint{});
    return [kk](const HomoPoint& t) { return ts(kk, t); };
  }
  if (name == "expsin")
    return [](const HomoPoint& t) {
      double s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += std::exp(std::sin(2 * pi * t[j]));
      return complex(s / 4);
    };
  if (name == "expsin1")
    return [](const HomoPoint& t) { return complex(std::exp(std::sin(2 * pi * t[0]))); };
  if (name == "sinprod")
    return [](const HomoPoint& t) {
      double p = 1;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p *= std::sin(pi * (t[i] - t[j]));
      return complex(p);
    };
  std::string known;
  for (const auto& p : builtin_probes()) known += (known.empty() ? "" : "|") + p.name;
  throw std::invalid_argument("unknown function '" + name + "' (expected " + known + ")");
}

}  // namespace fcc
