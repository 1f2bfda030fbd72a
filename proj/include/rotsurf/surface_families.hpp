// SPDX-License-Identifier: Apache-2.0
//
// Catalog of rotational surfaces in E^4_t, their profile curves, the
// closed-form second fundamental form and connection-form tables, and an
// RK4 generator for zero-mean-curvature profiles of the double rotational
// family.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rotsurf/jets.hpp"
#include "rotsurf/pseudo_linalg.hpp"

namespace rotsurf {

// ---------------------------------------------------------------------------
// Profile curves

/// x = x0 s + x1, w = w0 s + w1.
struct LineProfile {
  double x0 = 0, x1 = 0, w0 = 1, w1 = 0;
};

/// x = r0 cosh(s/r0), w = r0 sinh(s/r0).
struct HyperbolicArcProfile {
  double r0 = 1;
};

/// first = s, second = b0 * s^exponent (s > 0).
struct PowerProfile {
  double b0 = 1;
  double exponent = 2;
};

enum class ConicBranch { Trigonometric, Hyperbolic };

/// (first + second)^2 + lambda0 (first - second)^2 = mu0, parametrized by
/// u = first + second and v = first - second.
struct ConicProfile {
  double lambda0 = 1;
  double mu0 = 2;
  ConicBranch branch = ConicBranch::Trigonometric;
};

/// f(s) = f0 exp(k s); components (f cosh s, f sinh s), swapped when
/// cosh_first is false.
struct VranceanuProfile {
  double f0 = 1;
  double k = 0.1;
  bool cosh_first = true;
};

struct OdeState {
  double s = 0, x = 0, w = 0, phi = 0;
};

/// Integration stopped because a^2 x^2 + b^2 w^2 fell below tolerance.
class IntegrationHalt : public std::runtime_error {
 public:
  IntegrationHalt(const std::string& what, std::vector<OdeState> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const std::vector<OdeState>& partial() const { return partial_; }

 private:
  std::vector<OdeState> partial_;
};

/// Arc-length timelike profile with x' = sinh(phi), w' = cosh(phi) and
///   phi' = -(a^2 x cosh(phi) + b^2 w sinh(phi)) / (a^2 x^2 + b^2 w^2),
/// which makes the double rotational surface (a, b) minimal. Nodes are
/// spaced `step` apart through s_init; off-node queries take a single RK4
/// sub-step from the nearest node.
class ZeroMeanProfile {
 public:
  ZeroMeanProfile(double a, double b, double x_init, double w_init,
                  double phi_init, double s_init, double s_lo, double s_hi,
                  double step);

  ProfileJet jet(double s) const;
  OdeState state_at(double s) const;

  double a() const { return a_; }
  double b() const { return b_; }
  double step() const { return step_; }
  double s_lo() const { return s_lo_; }
  double s_hi() const { return s_hi_; }
  double s_init() const { return init_.s; }
  const OdeState& initial() const { return init_; }
  const std::vector<OdeState>& nodes() const { return nodes_; }

  /// max over interior nodes of |kappa_table - h3_22|, where kappa_table is
  /// the five-point derivative of the tabulated phi and h3_22 is evaluated
  /// on the tabulated state. Vanishes at the integrator's order.
  double tabulated_mean_curvature_residual() const;

 private:
  OdeState rk4(const OdeState& y, double h) const;

  double a_, b_, step_, s_lo_, s_hi_;
  OdeState init_;
  std::vector<OdeState> nodes_;
};

/// phi' for the zero-mean profile ODE (generic for dual evaluation).
template <class T>
T zero_mean_rhs(double a, double b, const T& x, const T& w, const T& phi) {
  using std::cosh;
  using std::sinh;
  return -(a * a * x * cosh(phi) + b * b * w * sinh(phi)) /
         (a * a * x * x + b * b * w * w);
}

struct OdeProfile {
  std::shared_ptr<const ZeroMeanProfile> curve;
};

/// Integrate a zero-mean profile. Throws IntegrationHalt on denominator
/// underflow and UsageError on invalid initial data.
OdeProfile zero_mean_profile_ode(double a, double b, double x_init,
                                 double w_init, double phi_init,
                                 std::pair<double, double> s_range,
                                 double step = 1e-3, double s_init = 0.0);

struct NoProfile {};

using ProfileCurve =
    std::variant<NoProfile, LineProfile, HyperbolicArcProfile, PowerProfile,
                 ConicProfile, VranceanuProfile, OdeProfile>;

/// Exact jets to order 3. Throws DomainError outside the profile's domain.
ProfileJet profile_jet(const ProfileCurve& profile, double s);

std::string profile_name(const ProfileCurve& profile);

/// Conic parametrization: returns the profile jet (first = (u+v)/2,
/// second = (u-v)/2) at parameter theta.
ProfileJet conic_profile_parametrize(double lambda0, double mu0, double theta,
                                     ConicBranch branch);

// ---------------------------------------------------------------------------
// Families

/// r = (x cos at, x sin at, w sinh bt, w cosh bt) in E^4_1, arc-length
/// timelike profile (x, w).
struct DoubleRotationalSpec {
  double a = 1, b = 1;
  ProfileCurve profile;
};

/// M1(b): r = (w sinh t, y cosh bt, y sinh bt, w cosh t) in E^4_2.
struct M1Spec {
  double b = 1;
  ProfileCurve profile;
};

/// M2(b): r = (x cos t, x sin t, z cos bt, z sin bt) in E^4_2.
struct M2Spec {
  double b = 1;
  ProfileCurve profile;
};

/// Double rotational surface over the hyperbolic arc of radius r0; minimal
/// in the de Sitter space of curvature 1/r0^2.
struct DeSitterMinimalSpec {
  double r0 = 1, a = 1, b = 1;
};

/// Coordinate plane r = s E_i + t E_j (0-based i < j).
struct PlaneSpec {
  int i = 2, j = 3;
  int ambient_index = 1;
};

/// Double rotational surface over the line x = c0 w through the origin,
/// parametrized by arc length with w(0) = w0.
struct ConeSpec {
  double c0 = 0.5, w0 = 1, a = 1, b = 1;
};

using FamilySpec = std::variant<DoubleRotationalSpec, M1Spec, M2Spec,
                                DeSitterMinimalSpec, PlaneSpec, ConeSpec>;

enum class Shape { DoubleRotational, M1, M2, Plane };

struct FamilyDomain {
  double s_lo = -1, s_hi = 1, t_lo = -1, t_hi = 1;
};

/// Coefficients that can be perturbed for mutation testing.
enum class CoefficientField {
  None, H3_11, H3_12, H3_22, H4_11, H4_12, H4_22, Om12_1, Om12_2, Om34_1,
  Om34_2
};

const char* to_string(CoefficientField f);
CoefficientField coefficient_field_from_string(const std::string& name);

struct Perturbation {
  CoefficientField field = CoefficientField::None;
  double delta = 0.0;
};

/// Validated family. Immutable after make_family.
struct SurfaceFamily {
  FamilySpec spec;
  std::string name;
  Shape shape = Shape::DoubleRotational;
  double a = 1, b = 1;
  ProfileCurve profile;
  int ambient_index = 1;
  FamilyDomain domain;
  SeparableImmersion immersion;
  double eps = 1, eps_star = 1;  // causal signs of the M families
  int orientation = 1;           // Hodge orientation matching e3 ^ e4
  int plane_i = 2, plane_j = 3;

  ProfileJet profile_jet(double s) const;
  ImmersionJet immersion_jet(double s, double t, int order) const;
  bool contains(double s, double t) const;
  /// Sign (+1 M1, -1 M2) relating the shared M-family tables.
  double mirror() const { return shape == Shape::M2 ? -1.0 : 1.0; }
  /// True when e1 is along d/dt (M1, M2), false when along d/ds.
  bool t_first() const { return shape == Shape::M1 || shape == Shape::M2; }
};

/// Validate parameters and regularity (|q|, |A| > tau_reg, constant causal
/// signs) on the domain. Throws UsageError.
SurfaceFamily make_family(const FamilySpec& spec,
                          std::optional<FamilyDomain> domain = std::nullopt);

FamilyDomain default_domain(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Closed-form tables

struct Sym2 {
  double m11 = 0, m12 = 0, m22 = 0;
  double operator()(int i, int j) const {
    return i == 0 && j == 0 ? m11 : (i == 1 && j == 1 ? m22 : m12);
  }
};

/// Regularity scalars and the table values at s, with exact s-derivatives
/// carried in the dual parts.
struct CoefficientTable {
  Dual<1> q, A;
  Dual<1> h3_11, h3_12, h3_22, h4_11, h4_12, h4_22;
  Dual<1> om12_1, om12_2, om34_1, om34_2;
};

CoefficientTable closed_form_coefficients(const SurfaceFamily& family,
                                          double s,
                                          const Perturbation& p = {});

/// The explicit frame of each family (e1, e2 tangent; e3, e4 normal).
MovingFrame closed_form_frame(const SurfaceFamily& family, double s, double t);

/// Regularity scalars (q, A) at s; masked when either is below tau_reg.
std::pair<double, double> regularity_scalars(const SurfaceFamily& family,
                                             double s);

}  // namespace rotsurf
