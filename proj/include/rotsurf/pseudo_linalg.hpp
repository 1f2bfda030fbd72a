// SPDX-License-Identifier: Apache-2.0
//
// Indefinite linear and exterior algebra on E^4_t and Lambda^2 E^4_t.
//
// The metric on E^4_t is diag(+,...,+,-,...,-) with the last t coordinates
// negative. Bivectors are stored in Pluecker coordinates on the index pairs
// (12,13,14,23,24,34); every serialized bivector uses this order.
#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "rotsurf/errors.hpp"

namespace rotsurf {

inline constexpr double kTauNull = 1e-12;  // causal classification
inline constexpr double kTauReg = 1e-8;    // frame degeneracy

/// Pluecker pair order. kPairs[k] = {A, B} with 0-based A < B.
inline constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Index of the pair (A, B), A < B, in the Pluecker order.
constexpr int pair_index(int a, int b) {
  for (int k = 0; k < 6; ++k)
    if (kPairs[k].first == a && kPairs[k].second == b) return k;
  return -1;
}

/// Sign of the k-th ambient basis vector in E^4_t.
constexpr double metric_sign(int k, int ambient_index) {
  return k < 4 - ambient_index ? 1.0 : -1.0;
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

const char* to_string(CausalCharacter c);

struct PseudoVector {
  std::array<double, 4> coords{};
  int ambient_index = 1;

  PseudoVector() = default;
  PseudoVector(std::array<double, 4> c, int t) : coords(c), ambient_index(t) {}

  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }

  PseudoVector& operator+=(const PseudoVector& o);
  PseudoVector& operator-=(const PseudoVector& o);
  PseudoVector& operator*=(double k);

  /// Euclidean norm of the coordinates (auxiliary, metric-free).
  double aux_norm() const;

  static PseudoVector basis(int k, int ambient_index);
};

PseudoVector operator+(PseudoVector a, const PseudoVector& b);
PseudoVector operator-(PseudoVector a, const PseudoVector& b);
PseudoVector operator*(double k, PseudoVector a);
PseudoVector operator*(PseudoVector a, double k);
PseudoVector operator-(PseudoVector a);

struct Bivector {
  std::array<double, 6> plucker{};
  int ambient_index = 1;

  Bivector() = default;
  Bivector(std::array<double, 6> p, int t) : plucker(p), ambient_index(t) {}

  double operator[](std::size_t i) const { return plucker[i]; }
  double& operator[](std::size_t i) { return plucker[i]; }

  Bivector& operator+=(const Bivector& o);
  Bivector& operator-=(const Bivector& o);
  Bivector& operator*=(double k);

  /// Euclidean norm of the six Pluecker coordinates.
  double aux_norm() const;

  /// E_A ^ E_B for 0-based ambient indices A != B (sign follows order).
  static Bivector basis(int a, int b, int ambient_index);
};

Bivector operator+(Bivector a, const Bivector& b);
Bivector operator-(Bivector a, const Bivector& b);
Bivector operator*(double k, Bivector a);
Bivector operator*(Bivector a, double k);
Bivector operator-(Bivector a);

/// <u,v> = sum_{i<=4-t} u_i v_i - sum_{i>4-t} u_i v_i.
double inner(const PseudoVector& u, const PseudoVector& v);

CausalCharacter causal_character(const PseudoVector& v,
                                 double tau_null = kTauNull);

/// p_AB = u_A v_B - u_B v_A.
Bivector wedge(const PseudoVector& u, const PseudoVector& v);

/// Induced determinant inner product: diagonal with signs eps_A eps_B.
double bivector_inner(const Bivector& b1, const Bivector& b2);

/// Sign of the pair (A,B) in the induced metric, eps_A * eps_B.
double bivector_metric_sign(int pair, int ambient_index);

/// Raw Hodge star for vol = E1^E2^E3^E4: alpha ^ *beta = <<alpha,beta>> vol.
/// Squares to (-1)^t.
Bivector hodge_star(const Bivector& b);

/// Orthogonal complement of a non-null decomposable bivector, normalized so
/// that (e1^e2)* = e3^e4 for every orthonormal frame with
/// orientation * det(e1,e2,e3,e4) = +1. Involutive.
Bivector hodge_complement(const Bivector& b, int orientation = 1,
                          double tau_null = kTauNull);

/// Interior product: iota_v(u ^ w) = <v,u> w - <v,w> u.
PseudoVector contract(const PseudoVector& v, const Bivector& b);

struct OrthonormalPair {
  PseudoVector e1;
  PseudoVector e2;
  double eps1 = 1.0;
  double eps2 = 1.0;
};

/// Gram-Schmidt for a nondegenerate plane. e1 is a positive multiple of v1;
/// normalization by |<v,v>|^(1/2) with signs recorded separately.
OrthonormalPair gram_schmidt_indefinite(const PseudoVector& v1,
                                        const PseudoVector& v2,
                                        double tau_reg = kTauReg);

enum class QuadricKind { Sphere, Hyperbolic };

/// <x-c,x-c> - 1/curvature (Sphere) or <x-c,x-c> + 1/curvature
/// (Hyperbolic). S^{m-1}_t(c, r^2) is the level set <x-c,x-c> = r^-2.
double quadric_membership(const PseudoVector& x, const PseudoVector& center,
                          double curvature, QuadricKind kind);

/// Oriented local orthonormal frame: e[0], e[1] tangent, e[2], e[3] normal,
/// <e_A, e_B> = delta_AB eps_A.
struct MovingFrame {
  std::array<PseudoVector, 4> e;
  std::array<double, 4> eps{1, 1, 1, 1};

  /// max_{A,B} |<e_A,e_B> - delta_AB eps_A|.
  double orthonormality_defect() const;
};

/// det of the 4x4 matrix with rows v0..v3.
double det4(const std::array<PseudoVector, 4>& rows);

}  // namespace rotsurf
