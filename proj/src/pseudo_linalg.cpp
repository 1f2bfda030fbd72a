// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/pseudo_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rotsurf/detail/exterior.hpp"

namespace rotsurf {

namespace {

void require_same_index(int a, int b) {
  if (a != b)
    throw UsageError("mismatched ambient index: E^4_" + std::to_string(a) +
                     " vs E^4_" + std::to_string(b));
}

}  // namespace

const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "?";
}

PseudoVector& PseudoVector::operator+=(const PseudoVector& o) {
  require_same_index(ambient_index, o.ambient_index);
  for (int i = 0; i < 4; ++i) coords[i] += o.coords[i];
  return *this;
}

PseudoVector& PseudoVector::operator-=(const PseudoVector& o) {
  require_same_index(ambient_index, o.ambient_index);
  for (int i = 0; i < 4; ++i) coords[i] -= o.coords[i];
  return *this;
}

PseudoVector& PseudoVector::operator*=(double k) {
  for (auto& c : coords) c *= k;
  return *this;
}

double PseudoVector::aux_norm() const {
  double s = 0;
  for (double c : coords) s += c * c;
  return std::sqrt(s);
}

PseudoVector PseudoVector::basis(int k, int ambient_index) {
  PseudoVector v({0, 0, 0, 0}, ambient_index);
  v.coords[k] = 1.0;
  return v;
}

PseudoVector operator+(PseudoVector a, const PseudoVector& b) { return a += b; }
PseudoVector operator-(PseudoVector a, const PseudoVector& b) { return a -= b; }
PseudoVector operator*(double k, PseudoVector a) { return a *= k; }
PseudoVector operator*(PseudoVector a, double k) { return a *= k; }
PseudoVector operator-(PseudoVector a) { return a *= -1.0; }

Bivector& Bivector::operator+=(const Bivector& o) {
  require_same_index(ambient_index, o.ambient_index);
  for (int i = 0; i < 6; ++i) plucker[i] += o.plucker[i];
  return *this;
}

Bivector& Bivector::operator-=(const Bivector& o) {
  require_same_index(ambient_index, o.ambient_index);
  for (int i = 0; i < 6; ++i) plucker[i] -= o.plucker[i];
  return *this;
}

Bivector& Bivector::operator*=(double k) {
  for (auto& c : plucker) c *= k;
  return *this;
}

double Bivector::aux_norm() const {
  double s = 0;
  for (double c : plucker) s += c * c;
  return std::sqrt(s);
}

Bivector Bivector::basis(int a, int b, int ambient_index) {
  return wedge(PseudoVector::basis(a, ambient_index),
               PseudoVector::basis(b, ambient_index));
}

Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
Bivector operator*(double k, Bivector a) { return a *= k; }
Bivector operator*(Bivector a, double k) { return a *= k; }
Bivector operator-(Bivector a) { return a *= -1.0; }

double inner(const PseudoVector& u, const PseudoVector& v) {
  require_same_index(u.ambient_index, v.ambient_index);
  double s = 0;
  for (int i = 0; i < 4; ++i)
    s += metric_sign(i, u.ambient_index) * u.coords[i] * v.coords[i];
  return s;
}

CausalCharacter causal_character(const PseudoVector& v, double tau_null) {
  const double g = inner(v, v);
  if (g > tau_null) return CausalCharacter::Spacelike;
  if (g < -tau_null) return CausalCharacter::Timelike;
  bool zero = true;
  for (double c : v.coords) zero = zero && c == 0.0;
  return zero ? CausalCharacter::Spacelike : CausalCharacter::Lightlike;
}

Bivector wedge(const PseudoVector& u, const PseudoVector& v) {
  require_same_index(u.ambient_index, v.ambient_index);
  return Bivector(detail::wedge(u.coords, v.coords), u.ambient_index);
}

double bivector_metric_sign(int pair, int ambient_index) {
  return metric_sign(kPairs[pair].first, ambient_index) *
         metric_sign(kPairs[pair].second, ambient_index);
}

double bivector_inner(const Bivector& b1, const Bivector& b2) {
  require_same_index(b1.ambient_index, b2.ambient_index);
  double s = 0;
  for (int k = 0; k < 6; ++k)
    s += bivector_metric_sign(k, b1.ambient_index) * b1.plucker[k] *
         b2.plucker[k];
  return s;
}

Bivector hodge_star(const Bivector& b) {
  return Bivector(detail::hodge_star(b.plucker, b.ambient_index),
                  b.ambient_index);
}

Bivector hodge_complement(const Bivector& b, int orientation, double tau_null) {
  const double g = bivector_inner(b, b);
  if (std::abs(g) < tau_null)
    throw DegenerateError("hodge_complement: null bivector");
  const double sign = (g > 0 ? 1.0 : -1.0) * (orientation >= 0 ? 1.0 : -1.0);
  return sign * hodge_star(b);
}

PseudoVector contract(const PseudoVector& v, const Bivector& b) {
  require_same_index(v.ambient_index, b.ambient_index);
  return PseudoVector(detail::contract(v.coords, b.plucker, b.ambient_index),
                      b.ambient_index);
}

OrthonormalPair gram_schmidt_indefinite(const PseudoVector& v1,
                                        const PseudoVector& v2,
                                        double tau_reg) {
  const double g11 = inner(v1, v1);
  const double g12 = inner(v1, v2);
  const double g22 = inner(v2, v2);
  const double scale = std::max({std::abs(g11), std::abs(g22), 1.0});
  if (std::abs(g11 * g22 - g12 * g12) < tau_reg * scale * scale)
    throw DegenerateError("gram_schmidt_indefinite: degenerate plane");
  if (std::abs(g11) < tau_reg * scale)
    throw DegenerateError("gram_schmidt_indefinite: first vector is null");
  OrthonormalPair out;
  out.eps1 = g11 > 0 ? 1.0 : -1.0;
  out.e1 = v1 * (1.0 / std::sqrt(std::abs(g11)));
  PseudoVector w = v2 - (out.eps1 * inner(v2, out.e1)) * out.e1;
  const double gw = inner(w, w);
  out.eps2 = gw > 0 ? 1.0 : -1.0;
  out.e2 = w * (1.0 / std::sqrt(std::abs(gw)));
  return out;
}

double quadric_membership(const PseudoVector& x, const PseudoVector& center,
                          double curvature, QuadricKind kind) {
  if (curvature == 0.0)
    throw UsageError("quadric_membership: curvature must be nonzero");
  const PseudoVector d = x - center;
  // The kind carries the sign; a negative curvature for the hyperbolic
  // quadric names the same level set as its magnitude.
  const double level = 1.0 / std::abs(curvature);
  return kind == QuadricKind::Sphere ? inner(d, d) - level
                                     : inner(d, d) + level;
}

double MovingFrame::orthonormality_defect() const {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double target = a == b ? eps[a] : 0.0;
      worst = std::max(worst, std::abs(inner(e[a], e[b]) - target));
    }
  return worst;
}

double det4(const std::array<PseudoVector, 4>& rows) {
  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = rows[i].coords[j];
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < 4; ++j) std::swap(m[c][j], m[piv][j]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace rotsurf
