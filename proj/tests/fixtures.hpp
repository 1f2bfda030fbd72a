// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rotsurf/surface_geometry.hpp"

namespace rotsurf::fixture {

struct NamedFamily {
  std::string label;
  SurfaceFamily family;
};

inline OdeProfile zero_h_profile() {
  return zero_mean_profile_ode(1, 1, 1, 0, 0, {-0.7, 0.7});
}

// Every cataloged family with at least one regular witness.
inline std::vector<NamedFamily> catalog() {
  std::vector<NamedFamily> out;
  auto add = [&](std::string label, FamilySpec spec) {
    out.push_back({std::move(label), make_family(spec)});
  };
  add("dsmin(1,1,2)", DeSitterMinimalSpec{1, 1, 2});
  add("dsmin(2,1.5,0.5)", DeSitterMinimalSpec{2, 1.5, 0.5});
  add("cone(0.5)", ConeSpec{});
  add("dr-hyperbolic(a=2,b=1)", DoubleRotationalSpec{2, 1, HyperbolicArcProfile{1.5}});
  add("dr-line", DoubleRotationalSpec{1, 1, LineProfile{0.75, 2, 1.25, 1}});
  add("dr-ode-zeroH", DoubleRotationalSpec{1, 1, zero_h_profile()});
  add("m1-conic(1)", M1Spec{1, ConicProfile{1, 2}});
  add("m1-power(2)", M1Spec{2, PowerProfile{1, 2}});
  add("m1-vranceanu", M1Spec{1, VranceanuProfile{1, 0.1}});
  add("m2-conic(1)", M2Spec{1, ConicProfile{1, 2}});
  add("m2-power(2)", M2Spec{2, PowerProfile{1, 2}});
  add("m2-vranceanu", M2Spec{1, VranceanuProfile{1, 0.1, false}});
  add("plane(34)", PlaneSpec{});
  return out;
}

// Uniform points in the family domain, inset by `margin` of each side.
inline std::vector<std::array<double, 2>> random_points(const SurfaceFamily& f, int n,
                                                        std::uint64_t seed,
                                                        double margin = 0.05) {
  const FamilyDomain& d = f.domain;
  const double ms = margin * (d.s_hi - d.s_lo), mt = margin * (d.t_hi - d.t_lo);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> us(d.s_lo + ms, d.s_hi - ms), ut(d.t_lo + mt, d.t_hi - mt);
  std::vector<std::array<double, 2>> pts;
  for (int k = 0; k < n; ++k) pts.push_back({us(rng), ut(rng)});
  return pts;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace rotsurf::fixture
