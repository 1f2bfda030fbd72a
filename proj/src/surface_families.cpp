// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/surface_families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rotsurf {

namespace {

double sgn(double x) { return x >= 0 ? 1.0 : -1.0; }

// Leibniz rule for derivatives 0..3 of a product.
Series product(const Series& f, const Series& g) {
  static constexpr int binom[4][4] = {
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  Series out{};
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m <= n; ++m) out[n] += binom[n][m] * f[m] * g[n - m];
  return out;
}

Series cosh_series(double s) {
  return {std::cosh(s), std::sinh(s), std::cosh(s), std::sinh(s)};
}
Series sinh_series(double s) {
  return {std::sinh(s), std::cosh(s), std::sinh(s), std::cosh(s)};
}

std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Zero-mean ODE

ZeroMeanProfile::ZeroMeanProfile(double a, double b, double x_init,
                                 double w_init, double phi_init,
                                 double s_init, double s_lo, double s_hi,
                                 double step)
    : a_(a), b_(b), step_(step), s_lo_(s_lo), s_hi_(s_hi),
      init_{s_init, x_init, w_init, phi_init} {
  if (!(a > 0) || !(b > 0))
    throw UsageError("zero_mean_profile_ode: a and b must be positive");
  if (!(step > 0)) throw UsageError("zero_mean_profile_ode: step must be > 0");
  if (!(s_lo <= s_init && s_init <= s_hi))
    throw UsageError("zero_mean_profile_ode: s_init outside s_range");
  if (a * a * x_init * x_init + b * b * w_init * w_init <= kTauReg)
    throw UsageError("zero_mean_profile_ode: a^2 x^2 + b^2 w^2 too small");

  auto march = [&](double h, double limit, std::vector<OdeState>& out) {
    OdeState y = init_;
    const long n = static_cast<long>(std::floor(std::abs(limit - y.s) / step + 1e-9));
    for (long k = 1; k <= n; ++k) {
      y = rk4(y, h);
      y.s = init_.s + static_cast<double>(k) * h;
      if (a * a * y.x * y.x + b * b * y.w * y.w <= kTauReg) {
        std::vector<OdeState> partial = out;
        throw IntegrationHalt("zero_mean_profile_ode: denominator underflow at s=" +
                                  format_double(y.s),
                              std::move(partial));
      }
      out.push_back(y);
    }
  };
  std::vector<OdeState> backward;
  std::vector<OdeState> forward;
  forward.push_back(init_);
  try {
    march(step, s_hi, forward);
    march(-step, s_lo, backward);
  } catch (const IntegrationHalt& halt) {
    std::vector<OdeState> partial(backward.rbegin(), backward.rend());
    partial.insert(partial.end(), forward.begin(), forward.end());
    throw IntegrationHalt(halt.what(), std::move(partial));
  }
  nodes_.assign(backward.rbegin(), backward.rend());
  nodes_.insert(nodes_.end(), forward.begin(), forward.end());
}

OdeState ZeroMeanProfile::rk4(const OdeState& y, double h) const {
  auto f = [&](double x, double w, double phi) {
    return std::array<double, 3>{std::sinh(phi), std::cosh(phi),
                                 zero_mean_rhs(a_, b_, x, w, phi)};
  };
  const auto k1 = f(y.x, y.w, y.phi);
  const auto k2 = f(y.x + 0.5 * h * k1[0], y.w + 0.5 * h * k1[1],
                    y.phi + 0.5 * h * k1[2]);
  const auto k3 = f(y.x + 0.5 * h * k2[0], y.w + 0.5 * h * k2[1],
                    y.phi + 0.5 * h * k2[2]);
  const auto k4 = f(y.x + h * k3[0], y.w + h * k3[1], y.phi + h * k3[2]);
  OdeState out;
  out.s = y.s + h;
  out.x = y.x + h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
  out.w = y.w + h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
  out.phi = y.phi + h / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]);
  return out;
}

OdeState ZeroMeanProfile::state_at(double s) const {
  if (s < s_lo_ - 1e-12 || s > s_hi_ + 1e-12)
    throw DomainError("ode profile: s outside integrated range");
  const double rel = (s - nodes_.front().s) / step_;
  long idx = std::lround(rel);
  idx = std::clamp<long>(idx, 0, static_cast<long>(nodes_.size()) - 1);
  const OdeState& node = nodes_[static_cast<std::size_t>(idx)];
  const double delta = s - node.s;
  if (delta == 0.0) return node;
  OdeState out = rk4(node, delta);
  out.s = s;
  return out;
}

ProfileJet ZeroMeanProfile::jet(double s) const {
  const OdeState y = state_at(s);
  const double dphi = zero_mean_rhs(a_, b_, y.x, y.w, y.phi);
  const double sh = std::sinh(y.phi), ch = std::cosh(y.phi);
  // phi'' by differentiating the right-hand side along the solution.
  const Dual<1> x(y.x, {sh}), w(y.w, {ch}), phi(y.phi, {dphi});
  const double ddphi = zero_mean_rhs(a_, b_, x, w, phi).d[0];
  ProfileJet jet;
  jet.s = s;
  jet.first = {y.x, sh, ch * dphi, sh * dphi * dphi + ch * ddphi};
  jet.second = {y.w, ch, sh * dphi, ch * dphi * dphi + sh * ddphi};
  return jet;
}

double ZeroMeanProfile::tabulated_mean_curvature_residual() const {
  double worst = 0.0;
  const std::size_t n = nodes_.size();
  if (n < 5) return 0.0;
  for (std::size_t k = 2; k + 2 < n; ++k) {
    const double kappa =
        (-nodes_[k + 2].phi + 8 * nodes_[k + 1].phi - 8 * nodes_[k - 1].phi +
         nodes_[k - 2].phi) /
        (12.0 * step_);
    const double h322 =
        zero_mean_rhs(a_, b_, nodes_[k].x, nodes_[k].w, nodes_[k].phi);
    worst = std::max(worst, std::abs(kappa - h322));
  }
  return worst;
}

OdeProfile zero_mean_profile_ode(double a, double b, double x_init,
                                 double w_init, double phi_init,
                                 std::pair<double, double> s_range,
                                 double step, double s_init) {
  return OdeProfile{std::make_shared<const ZeroMeanProfile>(
      a, b, x_init, w_init, phi_init, s_init, s_range.first, s_range.second,
      step)};
}

// ---------------------------------------------------------------------------
// Profiles

ProfileJet conic_profile_parametrize(double lambda0, double mu0, double theta,
                                     ConicBranch branch) {
  if (lambda0 == 0.0) throw UsageError("conic profile: lambda0 must be nonzero");
  Series u{}, v{};
  if (branch == ConicBranch::Trigonometric) {
    if (!(lambda0 > 0 && mu0 > 0))
      throw UsageError("conic profile: trigonometric branch needs lambda0, mu0 > 0");
    const double al = std::sqrt(mu0), be = std::sqrt(mu0 / lambda0);
    const double c = std::cos(theta), sn = std::sin(theta);
    u = {al * c, -al * sn, -al * c, al * sn};
    v = {be * sn, be * c, -be * sn, -be * c};
  } else {
    if (!(lambda0 < 0) || mu0 == 0.0)
      throw UsageError("conic profile: hyperbolic branch needs lambda0 < 0, mu0 != 0");
    const double al = std::sqrt(std::abs(mu0));
    const double be = std::sqrt(std::abs(mu0 / lambda0));
    const Series ch = cosh_series(theta), sh = sinh_series(theta);
    const Series& uu = mu0 > 0 ? ch : sh;
    const Series& vv = mu0 > 0 ? sh : ch;
    for (int k = 0; k < 4; ++k) {
      u[k] = al * uu[k];
      v[k] = be * vv[k];
    }
  }
  ProfileJet jet;
  jet.s = theta;
  for (int k = 0; k < 4; ++k) {
    jet.first[k] = 0.5 * (u[k] + v[k]);
    jet.second[k] = 0.5 * (u[k] - v[k]);
  }
  return jet;
}

ProfileJet profile_jet(const ProfileCurve& profile, double s) {
  ProfileJet jet;
  jet.s = s;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, NoProfile>) {
          // plane parametrizations carry only s
        } else if constexpr (std::is_same_v<P, LineProfile>) {
          jet.first = {p.x0 * s + p.x1, p.x0, 0, 0};
          jet.second = {p.w0 * s + p.w1, p.w0, 0, 0};
        } else if constexpr (std::is_same_v<P, HyperbolicArcProfile>) {
          const double u = s / p.r0, ch = std::cosh(u), sh = std::sinh(u);
          jet.first = {p.r0 * ch, sh, ch / p.r0, sh / (p.r0 * p.r0)};
          jet.second = {p.r0 * sh, ch, sh / p.r0, ch / (p.r0 * p.r0)};
        } else if constexpr (std::is_same_v<P, PowerProfile>) {
          if (!(s > 0)) throw DomainError("power profile: requires s > 0");
          const double e = p.exponent;
          jet.first = {s, 1, 0, 0};
          jet.second = {p.b0 * std::pow(s, e), p.b0 * e * std::pow(s, e - 1),
                        p.b0 * e * (e - 1) * std::pow(s, e - 2),
                        p.b0 * e * (e - 1) * (e - 2) * std::pow(s, e - 3)};
        } else if constexpr (std::is_same_v<P, ConicProfile>) {
          jet = conic_profile_parametrize(p.lambda0, p.mu0, s, p.branch);
        } else if constexpr (std::is_same_v<P, VranceanuProfile>) {
          const double f = p.f0 * std::exp(p.k * s);
          const Series fs{f, p.k * f, p.k * p.k * f, p.k * p.k * p.k * f};
          const Series c = product(fs, cosh_series(s));
          const Series sn = product(fs, sinh_series(s));
          jet.first = p.cosh_first ? c : sn;
          jet.second = p.cosh_first ? sn : c;
        } else if constexpr (std::is_same_v<P, OdeProfile>) {
          jet = p.curve->jet(s);
        }
      },
      profile);
  return jet;
}

std::string profile_name(const ProfileCurve& profile) {
  return std::visit(
      [](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, NoProfile>) return "none";
        else if constexpr (std::is_same_v<P, LineProfile>) return "line";
        else if constexpr (std::is_same_v<P, HyperbolicArcProfile>) return "hyperbolic";
        else if constexpr (std::is_same_v<P, PowerProfile>) return "power";
        else if constexpr (std::is_same_v<P, ConicProfile>) return "conic";
        else if constexpr (std::is_same_v<P, VranceanuProfile>) return "vranceanu";
        else return "ode";
      },
      profile);
}

// ---------------------------------------------------------------------------
// Families

const char* to_string(CoefficientField f) {
  switch (f) {
    case CoefficientField::None: return "none";
    case CoefficientField::H3_11: return "h3_11";
    case CoefficientField::H3_12: return "h3_12";
    case CoefficientField::H3_22: return "h3_22";
    case CoefficientField::H4_11: return "h4_11";
    case CoefficientField::H4_12: return "h4_12";
    case CoefficientField::H4_22: return "h4_22";
    case CoefficientField::Om12_1: return "om12_1";
    case CoefficientField::Om12_2: return "om12_2";
    case CoefficientField::Om34_1: return "om34_1";
    case CoefficientField::Om34_2: return "om34_2";
  }
  return "?";
}

CoefficientField coefficient_field_from_string(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(CoefficientField::Om34_2); ++k) {
    const auto f = static_cast<CoefficientField>(k);
    if (name == to_string(f)) return f;
  }
  throw UsageError("unknown coefficient field '" + name + "'");
}

ProfileJet SurfaceFamily::profile_jet(double s) const {
  return rotsurf::profile_jet(profile, s);
}

ImmersionJet SurfaceFamily::immersion_jet(double s, double t, int order) const {
  if (order < 0 || order > 3) throw UsageError("immersion_jet: order must be 0..3");
  return compose_immersion(immersion, ambient_index, profile_jet(s), t, order);
}

bool SurfaceFamily::contains(double s, double t) const {
  return s >= domain.s_lo && s <= domain.s_hi && t >= domain.t_lo &&
         t <= domain.t_hi;
}

FamilyDomain default_domain(const FamilySpec& spec) {
  const double pi = std::acos(-1.0);
  return std::visit(
      [&](const auto& f) -> FamilyDomain {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, DoubleRotationalSpec>) {
          if (const auto* ode = std::get_if<OdeProfile>(&f.profile))
            return {ode->curve->s_lo(), ode->curve->s_hi(), -pi, pi};
          return {-1, 1, -pi, pi};
        } else if constexpr (std::is_same_v<F, DeSitterMinimalSpec>) {
          return {-2, 2, -pi, pi};
        } else if constexpr (std::is_same_v<F, ConeSpec>) {
          // keep w >= w0 / 2 > 0 along the ruling
          const double half = 0.5 * std::abs(f.w0) * std::sqrt(1 - f.c0 * f.c0);
          return {-half, half + 1.0, -pi, pi};
        } else if constexpr (std::is_same_v<F, PlaneSpec>) {
          return {-1, 1, -1, 1};
        } else {
          if (std::holds_alternative<PowerProfile>(f.profile))
            return {0.1, 0.4, -1, 1};
          if (std::holds_alternative<ConicProfile>(f.profile))
            return {0.3, 1.2, -1, 1};
          if (std::holds_alternative<VranceanuProfile>(f.profile))
            return {0, 1, -1, 1};
          return {-1, 1, -1, 1};
        }
      },
      spec);
}

namespace {

SeparableImmersion double_rotational_map(double a, double b) {
  return {{{ProfileFactor::First, TimeFactor::Cos, a, 1},
           {ProfileFactor::First, TimeFactor::Sin, a, 1},
           {ProfileFactor::Second, TimeFactor::Sinh, b, 1},
           {ProfileFactor::Second, TimeFactor::Cosh, b, 1}}};
}

SeparableImmersion m1_map(double b) {
  return {{{ProfileFactor::First, TimeFactor::Sinh, 1, 1},
           {ProfileFactor::Second, TimeFactor::Cosh, b, 1},
           {ProfileFactor::Second, TimeFactor::Sinh, b, 1},
           {ProfileFactor::First, TimeFactor::Cosh, 1, 1}}};
}

SeparableImmersion m2_map(double b) {
  return {{{ProfileFactor::First, TimeFactor::Cos, 1, 1},
           {ProfileFactor::First, TimeFactor::Sin, 1, 1},
           {ProfileFactor::Second, TimeFactor::Cos, b, 1},
           {ProfileFactor::Second, TimeFactor::Sin, b, 1}}};
}

void require_positive(double v, const char* what) {
  if (!(v > 0)) throw UsageError(std::string(what) + " must be positive");
}

void validate_double_rotational_profile(const ProfileCurve& profile, double a,
                                        double b) {
  if (const auto* line = std::get_if<LineProfile>(&profile)) {
    if (std::abs(line->x0 * line->x0 - line->w0 * line->w0 + 1.0) > 1e-12)
      throw UsageError("line profile must be arc-length timelike: x0^2 - w0^2 = -1");
  } else if (const auto* arc = std::get_if<HyperbolicArcProfile>(&profile)) {
    require_positive(arc->r0, "r0");
  } else if (const auto* ode = std::get_if<OdeProfile>(&profile)) {
    if (!ode->curve) throw UsageError("ode profile missing trajectory");
    if (ode->curve->a() != a || ode->curve->b() != b)
      throw UsageError("ode profile was integrated for different (a, b)");
  } else {
    throw UsageError("double rotational family needs a line, hyperbolic or ode profile");
  }
}

void validate_m_profile(ProfileCurve& profile, bool is_m1) {
  if (auto* p = std::get_if<PowerProfile>(&profile)) {
    if (p->b0 == 0.0) throw UsageError("power profile: b0 must be nonzero");
  } else if (auto* c = std::get_if<ConicProfile>(&profile)) {
    if (c->lambda0 == 0.0) throw UsageError("conic profile: lambda0 must be nonzero");
    conic_profile_parametrize(c->lambda0, c->mu0, 0.0, c->branch);
  } else if (auto* v = std::get_if<VranceanuProfile>(&profile)) {
    if (v->f0 == 0.0) throw UsageError("vranceanu profile: f0 must be nonzero");
    v->cosh_first = is_m1;
  } else if (!std::holds_alternative<LineProfile>(profile)) {
    throw UsageError("M1/M2 families need a power, conic, vranceanu or line profile");
  }
}

// Raw (q^2, A^2) before taking signs.
std::pair<double, double> raw_regularity(const SurfaceFamily& f,
                                         const ProfileJet& j) {
  const double P = j.first[0], Q = j.second[0];
  const double dP = j.first[1], dQ = j.second[1];
  switch (f.shape) {
    case Shape::DoubleRotational:
      return {f.a * f.a * P * P + f.b * f.b * Q * Q, dP * dP - dQ * dQ};
    case Shape::M1:
    case Shape::M2:
      return {P * P - f.b * f.b * Q * Q, f.mirror() * (dQ * dQ - dP * dP)};
    case Shape::Plane: return {1.0, 1.0};
  }
  return {1.0, 1.0};
}

}  // namespace

std::pair<double, double> regularity_scalars(const SurfaceFamily& family,
                                             double s) {
  const auto [q2, a2] = raw_regularity(family, family.profile_jet(s));
  return {std::sqrt(std::abs(q2)), std::sqrt(std::abs(a2))};
}

SurfaceFamily make_family(const FamilySpec& spec,
                          std::optional<FamilyDomain> domain) {
  SurfaceFamily f;
  f.spec = spec;
  std::visit(
      [&](const auto& sp) {
        using F = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<F, DoubleRotationalSpec>) {
          require_positive(sp.a, "a");
          require_positive(sp.b, "b");
          validate_double_rotational_profile(sp.profile, sp.a, sp.b);
          f.name = "dr";
          f.shape = Shape::DoubleRotational;
          f.a = sp.a;
          f.b = sp.b;
          f.profile = sp.profile;
          f.ambient_index = 1;
        } else if constexpr (std::is_same_v<F, DeSitterMinimalSpec>) {
          require_positive(sp.r0, "r0");
          require_positive(sp.a, "a");
          require_positive(sp.b, "b");
          f.name = "dsmin";
          f.shape = Shape::DoubleRotational;
          f.a = sp.a;
          f.b = sp.b;
          f.profile = HyperbolicArcProfile{sp.r0};
          f.ambient_index = 1;
        } else if constexpr (std::is_same_v<F, ConeSpec>) {
          require_positive(sp.a, "a");
          require_positive(sp.b, "b");
          if (!(sp.c0 * sp.c0 < 1.0)) throw UsageError("cone: requires c0^2 < 1");
          if (sp.w0 == 0.0) throw UsageError("cone: w0 must be nonzero");
          const double k = 1.0 / std::sqrt(1.0 - sp.c0 * sp.c0);
          f.name = "cone";
          f.shape = Shape::DoubleRotational;
          f.a = sp.a;
          f.b = sp.b;
          f.profile = LineProfile{sp.c0 * k, sp.c0 * sp.w0, k, sp.w0};
          f.ambient_index = 1;
        } else if constexpr (std::is_same_v<F, PlaneSpec>) {
          if (!(0 <= sp.i && sp.i < sp.j && sp.j <= 3))
            throw UsageError("plane: needs 0 <= i < j <= 3");
          if (sp.ambient_index < 0 || sp.ambient_index > 2)
            throw UsageError("plane: ambient index must be 0, 1 or 2");
          f.name = "plane";
          f.shape = Shape::Plane;
          f.profile = NoProfile{};
          f.ambient_index = sp.ambient_index;
          f.plane_i = sp.i;
          f.plane_j = sp.j;
        } else {
          require_positive(sp.b, "b");
          constexpr bool is_m1 = std::is_same_v<F, M1Spec>;
          f.name = is_m1 ? "m1" : "m2";
          f.shape = is_m1 ? Shape::M1 : Shape::M2;
          f.b = sp.b;
          f.profile = sp.profile;
          validate_m_profile(f.profile, is_m1);
          f.ambient_index = 2;
        }
      },
      spec);

  switch (f.shape) {
    case Shape::DoubleRotational: f.immersion = double_rotational_map(f.a, f.b); break;
    case Shape::M1: f.immersion = m1_map(f.b); break;
    case Shape::M2: f.immersion = m2_map(f.b); break;
    case Shape::Plane: {
      SeparableImmersion m{};
      m[f.plane_i] = {ProfileFactor::Identity, TimeFactor::One, 1, 1};
      m[f.plane_j] = {ProfileFactor::One, TimeFactor::Identity, 1, 1};
      f.immersion = m;
      break;
    }
  }

  f.domain = domain.value_or(default_domain(spec));
  if (!(f.domain.s_lo < f.domain.s_hi) || !(f.domain.t_lo < f.domain.t_hi))
    throw UsageError("family domain must have lo < hi");

  // Regularity and constant causal signs across the declared s-range.
  constexpr int kProbe = 201;
  double eps = 0, eps_star = 0;
  for (int k = 0; k < kProbe; ++k) {
    const double s = f.domain.s_lo +
                     (f.domain.s_hi - f.domain.s_lo) * k / (kProbe - 1.0);
    ProfileJet jet;
    try {
      jet = f.profile_jet(s);
    } catch (const DomainError& e) {
      throw UsageError(std::string("family domain leaves profile domain: ") + e.what());
    }
    const auto [q2, a2] = raw_regularity(f, jet);
    if (std::sqrt(std::abs(q2)) < kTauReg || std::sqrt(std::abs(a2)) < kTauReg)
      throw UsageError("family is singular (|q| or |A| < tau_reg) at s=" +
                       format_double(s));
    if (f.shape == Shape::DoubleRotational && std::abs(a2 + 1.0) > 1e-8)
      throw UsageError("double rotational profile is not arc-length timelike");
    if (k == 0) {
      eps = sgn(a2);
      eps_star = sgn(q2);
    } else if (sgn(a2) != eps || sgn(q2) != eps_star) {
      throw UsageError("causal character of the family changes on the domain");
    }
  }
  if (f.shape == Shape::M1 || f.shape == Shape::M2) {
    f.eps = eps;
    f.eps_star = eps_star;
  }

  // Hodge orientation that reproduces e3 ^ e4 of the explicit frame.
  const double sc = 0.5 * (f.domain.s_lo + f.domain.s_hi);
  const double tc = 0.5 * (f.domain.t_lo + f.domain.t_hi);
  const ImmersionJet jet = f.immersion_jet(sc, tc, 1);
  Bivector tangent = wedge(jet.rs(), jet.rt());
  tangent *= 1.0 / std::sqrt(std::abs(bivector_inner(tangent, tangent)));
  const MovingFrame frame = closed_form_frame(f, sc, tc);
  const Bivector nu = wedge(frame.e[2], frame.e[3]);
  const double align = bivector_inner(hodge_complement(tangent, 1), nu) *
                       bivector_inner(nu, nu);
  f.orientation = align > 0 ? 1 : -1;
  return f;
}

// ---------------------------------------------------------------------------
// Closed-form tables

namespace {

using D1 = Dual<1>;

void apply(CoefficientTable& c, const Perturbation& p) {
  D1* field = nullptr;
  switch (p.field) {
    case CoefficientField::None: return;
    case CoefficientField::H3_11: field = &c.h3_11; break;
    case CoefficientField::H3_12: field = &c.h3_12; break;
    case CoefficientField::H3_22: field = &c.h3_22; break;
    case CoefficientField::H4_11: field = &c.h4_11; break;
    case CoefficientField::H4_12: field = &c.h4_12; break;
    case CoefficientField::H4_22: field = &c.h4_22; break;
    case CoefficientField::Om12_1: field = &c.om12_1; break;
    case CoefficientField::Om12_2: field = &c.om12_2; break;
    case CoefficientField::Om34_1: field = &c.om34_1; break;
    case CoefficientField::Om34_2: field = &c.om34_2; break;
  }
  field->v += p.delta;
}

}  // namespace

CoefficientTable closed_form_coefficients(const SurfaceFamily& family,
                                          double s, const Perturbation& p) {
  CoefficientTable c;
  c.q = D1(1.0);
  c.A = D1(1.0);
  if (family.shape == Shape::Plane) {
    apply(c, p);
    return c;
  }
  const ProfileJetDual j = promote(family.profile_jet(s));
  const D1 &P = j.first[0], &dP = j.first[1], &ddP = j.first[2];
  const D1 &Q = j.second[0], &dQ = j.second[1], &ddQ = j.second[2];
  const double a = family.a, b = family.b;

  if (family.shape == Shape::DoubleRotational) {
    // (P, Q) = (x, w), arc-length timelike profile.
    const D1 q2 = a * a * P * P + b * b * Q * Q;
    c.q = sqrt(q2);
    c.A = sqrt(abs(dP * dP - dQ * dQ));
    c.h3_11 = dQ * ddP - dP * ddQ;
    c.h3_22 = -(a * a * P * dQ + b * b * Q * dP) / q2;
    c.h4_12 = a * b * (P * dQ - Q * dP) / q2;
    c.om12_2 = (a * a * P * dP + b * b * Q * dQ) / q2;
    c.om34_2 = a * b * (P * dP - Q * dQ) / q2;
  } else {
    // M1: (P, Q) = (w, y); M2: (P, Q) = (x, z). The two tables differ by
    // the mirror sign in A^2, h3_22, h4_12 and om34(e1).
    const double sigma = family.mirror();
    const double ee = family.eps * family.eps_star;
    const D1 q2 = family.eps_star * (P * P - b * b * Q * Q);
    const D1 A = sqrt(family.eps * sigma * (dQ * dQ - dP * dP));
    c.q = sqrt(q2);
    c.A = A;
    const D1 Aq2 = A * q2;
    c.h3_11 = (b * b * Q * dP - P * dQ) / Aq2;
    c.h3_22 = sigma * (dP * ddQ - dQ * ddP) / (A * A * A);
    c.h4_12 = sigma * ee * b * (P * dQ - Q * dP) / Aq2;
    c.om12_1 = (b * b * Q * dQ - P * dP) / Aq2;
    c.om34_1 = sigma * ee * b * (P * dP - Q * dQ) / Aq2;
  }
  apply(c, p);
  return c;
}

MovingFrame closed_form_frame(const SurfaceFamily& family, double s,
                              double t) {
  MovingFrame fr;
  const int T = family.ambient_index;
  auto vec = [T](double a0, double a1, double a2, double a3) {
    return PseudoVector({a0, a1, a2, a3}, T);
  };
  if (family.shape == Shape::Plane) {
    int normals[2], n = 0;
    for (int k = 0; k < 4; ++k)
      if (k != family.plane_i && k != family.plane_j) normals[n++] = k;
    const int idx[4] = {family.plane_i, family.plane_j, normals[0], normals[1]};
    for (int A = 0; A < 4; ++A) {
      fr.e[A] = PseudoVector::basis(idx[A], T);
      fr.eps[A] = metric_sign(idx[A], T);
    }
    return fr;
  }
  const ProfileJet j = family.profile_jet(s);
  const double P = j.first[0], dP = j.first[1];
  const double Q = j.second[0], dQ = j.second[1];
  const double a = family.a, b = family.b;
  const auto [q, A] = regularity_scalars(family, s);
  if (q < kTauReg || A < kTauReg)
    throw DegenerateError("closed_form_frame: singular point");

  if (family.shape == Shape::DoubleRotational) {
    const double ca = std::cos(a * t), sa = std::sin(a * t);
    const double cb = std::cosh(b * t), sb = std::sinh(b * t);
    fr.e[0] = vec(dP * ca, dP * sa, dQ * sb, dQ * cb);
    fr.e[1] = vec(-a * P * sa / q, a * P * ca / q, b * Q * cb / q, b * Q * sb / q);
    fr.e[2] = vec(dQ * ca, dQ * sa, dP * sb, dP * cb);
    fr.e[3] = vec(b * Q * sa / q, -b * Q * ca / q, a * P * cb / q, a * P * sb / q);
    fr.eps = {-1, 1, 1, 1};
    return fr;
  }
  const double ee = family.eps * family.eps_star;
  if (family.shape == Shape::M1) {
    const double ch = std::cosh(t), sh = std::sinh(t);
    const double cb = std::cosh(b * t), sb = std::sinh(b * t);
    fr.e[0] = vec(P * ch / q, b * Q * sb / q, b * Q * cb / q, P * sh / q);
    fr.e[1] = vec(dP * sh / A, dQ * cb / A, dQ * sb / A, dP * ch / A);
    fr.e[2] = vec(dQ * sh / A, dP * cb / A, dP * sb / A, dQ * ch / A);
    fr.e[3] = (-ee / q) * vec(b * Q * ch, P * sb, P * cb, b * Q * sh);
  } else {
    const double c1 = std::cos(t), s1 = std::sin(t);
    const double cb = std::cos(b * t), sb = std::sin(b * t);
    fr.e[0] = vec(-P * s1 / q, P * c1 / q, -b * Q * sb / q, b * Q * cb / q);
    fr.e[1] = vec(dP * c1 / A, dP * s1 / A, dQ * cb / A, dQ * sb / A);
    fr.e[2] = vec(dQ * c1 / A, dQ * s1 / A, dP * cb / A, dP * sb / A);
    fr.e[3] = (-ee / q) * vec(b * Q * s1, -b * Q * c1, P * sb, -P * cb);
  }
  fr.eps = {family.eps_star, family.eps, -family.eps, -family.eps_star};
  return fr;
}

}  // namespace rotsurf
