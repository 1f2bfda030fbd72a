// SPDX-License-Identifier: Apache-2.0
//
// Analytic jets of profile curves and separable immersions, a forward-mode
// dual number for exact first derivatives of composite expressions, and the
// central finite-difference oracle used to validate them.
#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "rotsurf/pseudo_linalg.hpp"

namespace rotsurf {

/// Value with exact first partials in N directions.
template <int N>
struct Dual {
  double v = 0.0;
  std::array<double, N> d{};

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: constants promote implicitly
  Dual(double value, std::array<double, N> grad) : v(value), d(grad) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (int i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    const double inv = 1.0 / o.v;
    for (int i = 0; i < N; ++i) d[i] = (d[i] - v * inv * o.d[i]) * inv;
    v *= inv;
    return *this;
  }
};

template <int N> Dual<N> operator+(Dual<N> a, const Dual<N>& b) { return a += b; }
template <int N> Dual<N> operator-(Dual<N> a, const Dual<N>& b) { return a -= b; }
template <int N> Dual<N> operator*(Dual<N> a, const Dual<N>& b) { return a *= b; }
template <int N> Dual<N> operator/(Dual<N> a, const Dual<N>& b) { return a /= b; }
template <int N> Dual<N> operator+(Dual<N> a, double b) { a.v += b; return a; }
template <int N> Dual<N> operator+(double b, Dual<N> a) { a.v += b; return a; }
template <int N> Dual<N> operator-(Dual<N> a, double b) { a.v -= b; return a; }
template <int N> Dual<N> operator-(double b, const Dual<N>& a) { return Dual<N>(b) - a; }
template <int N> Dual<N> operator*(Dual<N> a, double b) {
  a.v *= b;
  for (auto& x : a.d) x *= b;
  return a;
}
template <int N> Dual<N> operator*(double b, Dual<N> a) { return a * b; }
template <int N> Dual<N> operator/(Dual<N> a, double b) { return a * (1.0 / b); }
template <int N> Dual<N> operator/(double b, const Dual<N>& a) { return Dual<N>(b) / a; }
template <int N> Dual<N> operator-(Dual<N> a) { return a * -1.0; }

namespace detail {
template <int N>
Dual<N> chain(const Dual<N>& a, double value, double slope) {
  Dual<N> out(value);
  for (int i = 0; i < N; ++i) out.d[i] = slope * a.d[i];
  return out;
}
}  // namespace detail

template <int N> Dual<N> sqrt(const Dual<N>& a) {
  const double r = std::sqrt(a.v);
  return detail::chain(a, r, 0.5 / r);
}
template <int N> Dual<N> sin(const Dual<N>& a) { return detail::chain(a, std::sin(a.v), std::cos(a.v)); }
template <int N> Dual<N> cos(const Dual<N>& a) { return detail::chain(a, std::cos(a.v), -std::sin(a.v)); }
template <int N> Dual<N> sinh(const Dual<N>& a) { return detail::chain(a, std::sinh(a.v), std::cosh(a.v)); }
template <int N> Dual<N> cosh(const Dual<N>& a) { return detail::chain(a, std::cosh(a.v), std::sinh(a.v)); }
template <int N> Dual<N> exp(const Dual<N>& a) {
  const double e = std::exp(a.v);
  return detail::chain(a, e, e);
}
template <int N> Dual<N> abs(const Dual<N>& a) { return a.v < 0 ? -a : a; }

inline double value_of(double x) { return x; }
template <int N> double value_of(const Dual<N>& x) { return x.v; }

/// Derivatives 0..3 of one scalar function of s.
using Series = std::array<double, 4>;

/// Derivatives to order 3 of the two profile components at s. The meaning of
/// the components depends on the family: (x, w) for double rotational
/// surfaces, (w, y) for M1, (x, z) for M2.
struct ProfileJet {
  double s = 0.0;
  Series first{};
  Series second{};

  /// w'x'' - x'w'' for an arc-length profile (first = x, second = w).
  double curvature() const;
  /// first'^2 - second'^2.
  double speed_form() const;
};

/// Jet components promoted to dual numbers in s: value k carries
/// derivative k+1, so closed-form coefficient formulas evaluated on them
/// return exact s-derivatives. Only orders 0..2 are promoted.
struct ProfileJetDual {
  std::array<Dual<1>, 3> first;
  std::array<Dual<1>, 3> second;
};

ProfileJetDual promote(const ProfileJet& jet);

/// Partials d^{i+j} r / ds^i dt^j for i + j <= 3.
struct ImmersionJet {
  double s = 0.0;
  double t = 0.0;
  int order = 0;
  std::array<std::array<PseudoVector, 4>, 4> d{};

  const PseudoVector& partial(int i, int j) const { return d[i][j]; }
  const PseudoVector& r() const { return d[0][0]; }
  const PseudoVector& rs() const { return d[1][0]; }
  const PseudoVector& rt() const { return d[0][1]; }
  const PseudoVector& rss() const { return d[2][0]; }
  const PseudoVector& rst() const { return d[1][1]; }
  const PseudoVector& rts() const { return d[1][1]; }
  const PseudoVector& rtt() const { return d[0][2]; }
};

/// t-dependence of one separable coordinate.
enum class TimeFactor { Zero, One, Identity, Cos, Sin, Cosh, Sinh };
/// s-dependence of one separable coordinate.
enum class ProfileFactor { Zero, One, Identity, First, Second };

/// r_k(s,t) = sign * P_k(s) * T_k(rate * t).
struct SeparableCoordinate {
  ProfileFactor profile = ProfileFactor::Zero;
  TimeFactor time = TimeFactor::One;
  double rate = 1.0;
  double sign = 1.0;
};

using SeparableImmersion = std::array<SeparableCoordinate, 4>;

/// j-th derivative of T(rate * t).
double time_factor_derivative(TimeFactor f, double rate, double t, int j);

/// Compose a profile jet with the t-dependence analytically up to `order`.
ImmersionJet compose_immersion(const SeparableImmersion& map,
                               int ambient_index, const ProfileJet& profile,
                               double t, int order);

/// Second-order central difference of f at x along a unit step h.
/// The stencil [x-h, x+h] must lie inside [lo, hi].
double fd_partial(const std::function<double(double)>& f, double x, double h,
                  double lo, double hi);

/// Vector-valued central difference with the same domain contract.
template <class V>
V fd_partial_vec(const std::function<V(double)>& f, double x, double h,
                 double lo, double hi) {
  if (x - h < lo || x + h > hi)
    throw RangeError("fd_partial: stencil outside sampled range");
  V a = f(x + h);
  V b = f(x - h);
  a -= b;
  a *= 0.5 / h;
  return a;
}

}  // namespace rotsurf
