// SPDX-License-Identifier: Apache-2.0
//
// Scalar-generic kernels behind PseudoVector / Bivector. Instantiated with
// double for the public API and with Dual<N> where exact derivatives of a
// frame are needed.
#pragma once

#include <array>

namespace rotsurf::detail {

template <class T> using Vec4 = std::array<T, 4>;
template <class T> using Vec6 = std::array<T, 6>;

inline constexpr int kPairA[6] = {0, 0, 0, 1, 1, 2};
inline constexpr int kPairB[6] = {1, 2, 3, 2, 3, 3};
// sgn(A,B,C,D) for pair k and its complement 5-k.
inline constexpr double kComplementSign[6] = {1, -1, 1, 1, -1, 1};

inline double sign_of(int k, int t) { return k < 4 - t ? 1.0 : -1.0; }

template <class T>
T inner(const Vec4<T>& u, const Vec4<T>& v, int t) {
  T s = u[0] * v[0] * sign_of(0, t);
  for (int i = 1; i < 4; ++i) s += u[i] * v[i] * sign_of(i, t);
  return s;
}

template <class T>
Vec6<T> wedge(const Vec4<T>& u, const Vec4<T>& v) {
  Vec6<T> b;
  for (int k = 0; k < 6; ++k)
    b[k] = u[kPairA[k]] * v[kPairB[k]] - u[kPairB[k]] * v[kPairA[k]];
  return b;
}

template <class T>
T bivector_inner(const Vec6<T>& p, const Vec6<T>& q, int t) {
  T s = p[0] * q[0] * (sign_of(0, t) * sign_of(1, t));
  for (int k = 1; k < 6; ++k)
    s += p[k] * q[k] * (sign_of(kPairA[k], t) * sign_of(kPairB[k], t));
  return s;
}

template <class T>
Vec6<T> hodge_star(const Vec6<T>& p, int t) {
  Vec6<T> out;
  for (int k = 0; k < 6; ++k)
    out[5 - k] = p[k] * (sign_of(kPairA[k], t) * sign_of(kPairB[k], t) *
                         kComplementSign[k]);
  return out;
}

/// iota_v(E_A ^ E_B) = <v,E_A> E_B - <v,E_B> E_A, extended linearly.
template <class T>
Vec4<T> contract(const Vec4<T>& v, const Vec6<T>& p, int t) {
  Vec4<T> out{T(0.0), T(0.0), T(0.0), T(0.0)};
  for (int k = 0; k < 6; ++k) {
    const int a = kPairA[k], b = kPairB[k];
    out[b] += p[k] * (v[a] * sign_of(a, t));
    out[a] -= p[k] * (v[b] * sign_of(b, t));
  }
  return out;
}

}  // namespace rotsurf::detail
