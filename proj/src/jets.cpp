// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/jets.hpp"

#include <cmath>

namespace rotsurf {

double ProfileJet::curvature() const {
  return second[1] * first[2] - first[1] * second[2];
}

double ProfileJet::speed_form() const {
  return first[1] * first[1] - second[1] * second[1];
}

ProfileJetDual promote(const ProfileJet& jet) {
  ProfileJetDual out;
  for (int k = 0; k < 3; ++k) {
    out.first[k] = Dual<1>(jet.first[k], {jet.first[k + 1]});
    out.second[k] = Dual<1>(jet.second[k], {jet.second[k + 1]});
  }
  return out;
}

double time_factor_derivative(TimeFactor f, double rate, double t, int j) {
  const double x = rate * t;
  const double scale = std::pow(rate, j);
  switch (f) {
    case TimeFactor::Zero: return 0.0;
    case TimeFactor::One: return j == 0 ? 1.0 : 0.0;
    case TimeFactor::Identity:
      return j == 0 ? x : (j == 1 ? rate : 0.0);
    case TimeFactor::Cos: {
      static constexpr double sgn[4] = {1, -1, -1, 1};
      return scale * sgn[j % 4] * (j % 2 == 0 ? std::cos(x) : std::sin(x));
    }
    case TimeFactor::Sin: {
      static constexpr double sgn[4] = {1, 1, -1, -1};
      return scale * sgn[j % 4] * (j % 2 == 0 ? std::sin(x) : std::cos(x));
    }
    case TimeFactor::Cosh:
      return scale * (j % 2 == 0 ? std::cosh(x) : std::sinh(x));
    case TimeFactor::Sinh:
      return scale * (j % 2 == 0 ? std::sinh(x) : std::cosh(x));
  }
  return 0.0;
}

namespace {

double profile_factor_derivative(ProfileFactor f, const ProfileJet& jet,
                                 int i) {
  switch (f) {
    case ProfileFactor::Zero: return 0.0;
    case ProfileFactor::One: return i == 0 ? 1.0 : 0.0;
    case ProfileFactor::Identity:
      return i == 0 ? jet.s : (i == 1 ? 1.0 : 0.0);
    case ProfileFactor::First: return jet.first[i];
    case ProfileFactor::Second: return jet.second[i];
  }
  return 0.0;
}

}  // namespace

ImmersionJet compose_immersion(const SeparableImmersion& map,
                               int ambient_index, const ProfileJet& profile,
                               double t, int order) {
  ImmersionJet jet;
  jet.s = profile.s;
  jet.t = t;
  jet.order = order;
  for (auto& row : jet.d)
    for (auto& v : row) v = PseudoVector({0, 0, 0, 0}, ambient_index);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      for (int k = 0; k < 4; ++k) {
        const auto& c = map[k];
        jet.d[i][j].coords[k] =
            c.sign * profile_factor_derivative(c.profile, profile, i) *
            time_factor_derivative(c.time, c.rate, t, j);
      }
    }
  }
  return jet;
}

double fd_partial(const std::function<double(double)>& f, double x, double h,
                  double lo, double hi) {
  if (x - h < lo || x + h > hi)
    throw RangeError("fd_partial: stencil outside sampled range");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace rotsurf
