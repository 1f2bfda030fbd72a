// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/surface_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "rotsurf/detail/exterior.hpp"

namespace rotsurf {

const char* to_string(Path p) {
  return p == Path::ClosedForm ? "closed_form" : "generic";
}

namespace {

using D2 = Dual<2>;
using V4 = detail::Vec4<D2>;

double sgn(double x) { return x >= 0 ? 1.0 : -1.0; }

V4 lift(const PseudoVector& v, const PseudoVector& ds, const PseudoVector& dt) {
  V4 out;
  for (int k = 0; k < 4; ++k) out[k] = D2(v[k], {ds[k], dt[k]});
  return out;
}

V4 scaled(const V4& v, const D2& k) {
  V4 out;
  for (int i = 0; i < 4; ++i) out[i] = v[i] * k;
  return out;
}

V4 minus(const V4& a, const V4& b) {
  V4 out;
  for (int i = 0; i < 4; ++i) out[i] = a[i] - b[i];
  return out;
}

PseudoVector value(const V4& v, int T) {
  return PseudoVector({v[0].v, v[1].v, v[2].v, v[3].v}, T);
}

// Directional derivative along c_s d/ds + c_t d/dt.
PseudoVector directional(const V4& v, const std::array<double, 2>& c, int T) {
  PseudoVector out({0, 0, 0, 0}, T);
  for (int k = 0; k < 4; ++k) out[k] = c[0] * v[k].d[0] + c[1] * v[k].d[1];
  return out;
}

struct GenericFrame {
  std::array<V4, 4> e;
  std::array<double, 4> eps{};
  // e_k = c[k][0] r_s + c[k][1] r_t
  std::array<std::array<double, 2>, 2> c{};
  double q = 1, A = 1;
  PseudoVector r;
};

GenericFrame generic_frame(const SurfaceFamily& f, double s, double t) {
  const int T = f.ambient_index;
  const ImmersionJet jet = f.immersion_jet(s, t, 3);
  const V4 rs = lift(jet.d[1][0], jet.d[2][0], jet.d[1][1]);
  const V4 rt = lift(jet.d[0][1], jet.d[1][1], jet.d[0][2]);
  const V4 rss = lift(jet.d[2][0], jet.d[3][0], jet.d[2][1]);
  const V4 rtt = lift(jet.d[0][2], jet.d[1][2], jet.d[0][3]);

  // Throws on a degenerate tangent plane.
  gram_schmidt_indefinite(f.t_first() ? jet.rt() : jet.rs(),
                          f.t_first() ? jet.rs() : jet.rt());

  GenericFrame g;
  g.r = jet.r();
  const V4& u1 = f.t_first() ? rt : rs;
  const V4& u2 = f.t_first() ? rs : rt;
  const D2 g11 = detail::inner(u1, u1, T);
  g.eps[0] = sgn(g11.v);
  g.e[0] = scaled(u1, 1.0 / sqrt(abs(g11)));
  const V4 w = minus(u2, scaled(g.e[0], g.eps[0] * detail::inner(u2, g.e[0], T)));
  const D2 gw = detail::inner(w, w, T);
  g.eps[1] = sgn(gw.v);
  g.e[1] = scaled(w, 1.0 / sqrt(abs(gw)));

  auto normal_part = [&](const V4& v) {
    V4 n = minus(v, scaled(g.e[0], g.eps[0] * detail::inner(v, g.e[0], T)));
    return minus(n, scaled(g.e[1], g.eps[1] * detail::inner(v, g.e[1], T)));
  };
  // e3 along the normal part of r_ss or r_tt, whichever is larger; a
  // totally geodesic point falls back to the ambient basis.
  V4 n = normal_part(rss);
  D2 gn = detail::inner(n, n, T);
  {
    const V4 ntt = normal_part(rtt);
    const D2 gtt = detail::inner(ntt, ntt, T);
    if (std::abs(gtt.v) > std::abs(gn.v)) {
      n = ntt;
      gn = gtt;
    }
  }
  if (std::abs(gn.v) < 1e-20) {
    double best = 0;
    for (int k = 0; k < 4; ++k) {
      V4 ek{D2(0.0), D2(0.0), D2(0.0), D2(0.0)};
      ek[k] = D2(1.0);
      const V4 nk = normal_part(ek);
      const D2 gk = detail::inner(nk, nk, T);
      if (std::abs(gk.v) > best + 1e-12) {
        best = std::abs(gk.v);
        n = nk;
        gn = gk;
      }
    }
    if (best < kTauReg) throw DegenerateError("generic frame: no normal direction");
  }
  g.eps[2] = sgn(gn.v);
  g.e[2] = scaled(n, 1.0 / sqrt(abs(gn)));

  // Align e1, e2, e3 with the explicit frame; e4 then follows from nu.
  const MovingFrame cf = closed_form_frame(f, s, t);
  for (int A = 0; A < 3; ++A)
    if (inner(value(g.e[A], T), cf.e[A]) * g.eps[A] < 0)
      g.e[A] = scaled(g.e[A], D2(-1.0));

  const auto B = detail::wedge(rs, rt);
  const D2 gb = detail::bivector_inner(B, B, T);
  const auto star = detail::hodge_star(B, T);
  const D2 k = (sgn(gb.v) * (f.orientation >= 0 ? 1.0 : -1.0)) / sqrt(abs(gb));
  detail::Vec6<D2> nu;
  for (int i = 0; i < 6; ++i) nu[i] = star[i] * k;
  g.e[3] = scaled(detail::contract(g.e[2], nu, T), D2(g.eps[2]));
  g.eps[3] = sgn(detail::inner(g.e[3], g.e[3], T).v);

  // Coordinates of e1, e2 in the basis (r_s, r_t).
  const double G11 = inner(jet.rs(), jet.rs()), G12 = inner(jet.rs(), jet.rt()),
               G22 = inner(jet.rt(), jet.rt());
  const double det = G11 * G22 - G12 * G12;
  for (int kk = 0; kk < 2; ++kk) {
    const PseudoVector ek = value(g.e[kk], T);
    const double b1 = inner(ek, jet.rs()), b2 = inner(ek, jet.rt());
    g.c[kk] = {(G22 * b1 - G12 * b2) / det, (G11 * b2 - G12 * b1) / det};
  }
  g.q = std::sqrt(std::abs(G22));
  g.A = std::sqrt(std::abs(G11));
  return g;
}

// Coefficients only, without trace gradients or derived quantities.
GeometrySample generic_coefficients(const SurfaceFamily& f, double s, double t) {
  const int T = f.ambient_index;
  const GenericFrame g = generic_frame(f, s, t);
  GeometrySample out;
  out.s = s;
  out.t = t;
  out.eps = f.eps;
  out.eps_star = f.eps_star;
  out.q = g.q;
  out.A = g.A;
  out.r = g.r;
  for (int A = 0; A < 4; ++A) {
    out.frame.e[A] = value(g.e[A], T);
    out.frame.eps[A] = g.eps[A];
  }
  // d[i][j] = D~_{e_j} e_i
  auto d = [&](int i, int j) { return directional(g.e[i], g.c[j], T); };
  const auto& e = out.frame.e;
  out.h3 = {inner(d(0, 0), e[2]), inner(d(0, 1), e[2]), inner(d(1, 1), e[2])};
  out.h4 = {inner(d(0, 0), e[3]), inner(d(0, 1), e[3]), inner(d(1, 1), e[3])};
  out.om12 = {inner(d(0, 0), e[1]), inner(d(0, 1), e[1])};
  out.om34 = {inner(d(2, 0), e[3]), inner(d(2, 1), e[3])};
  const auto& ep = out.frame.eps;
  out.trace = {ep[0] * out.h3.m11 + ep[1] * out.h3.m22,
               ep[0] * out.h4.m11 + ep[1] * out.h4.m22};
  return out;
}

void finish(GeometrySample& g) {
  auto [H, h2] = mean_curvature(g);
  g.H = H;
  g.normH2 = h2;
  g.norm_h2 = squared_h(g);
  g.RD = normal_curvature_RD(g);
  g.lap_nu = laplacian_gauss_structural(g);
}

}  // namespace

GeometrySample closed_form_geometry(const SurfaceFamily& family, double s,
                                    double t, const Perturbation& p) {
  const CoefficientTable c = closed_form_coefficients(family, s, p);
  GeometrySample g;
  g.s = s;
  g.t = t;
  g.frame = closed_form_frame(family, s, t);
  g.eps = family.eps;
  g.eps_star = family.eps_star;
  g.q = c.q.v;
  g.A = c.A.v;
  g.h3 = {c.h3_11.v, c.h3_12.v, c.h3_22.v};
  g.h4 = {c.h4_11.v, c.h4_12.v, c.h4_22.v};
  g.om12 = {c.om12_1.v, c.om12_2.v};
  g.om34 = {c.om34_1.v, c.om34_2.v};
  const auto& ep = g.frame.eps;
  const Dual<1> tr3 = ep[0] * c.h3_11 + ep[1] * c.h3_22;
  const Dual<1> tr4 = ep[0] * c.h4_11 + ep[1] * c.h4_22;
  g.trace = {tr3.v, tr4.v};
  // The tables depend on s only; d/ds is e1 (double rotational) or A e2.
  std::array<double, 2> cs{0, 0};
  if (family.shape == Shape::DoubleRotational) cs = {1, 0};
  else if (family.t_first()) cs = {0, 1.0 / c.A.v};
  g.dtrace = {{{cs[0] * tr3.d[0], cs[1] * tr3.d[0]},
               {cs[0] * tr4.d[0], cs[1] * tr4.d[0]}}};
  g.r = family.immersion_jet(s, t, 0).r();
  g.nu = gauss_map(family, s, t);
  finish(g);
  return g;
}

GeometrySample generic_geometry(const SurfaceFamily& family, double s,
                                double t) {
  GeometrySample g = generic_coefficients(family, s, t);
  // Trace gradients by fourth-order central differences. The traces carry
  // cancellation noise near 1e-10 far out in boosted directions, so the
  // step stays at 1e-3 where truncation is still negligible.
  constexpr double h = 1e-3;
  auto tr = [&](double ss, double tt) {
    return generic_coefficients(family, ss, tt).trace;
  };
  const auto sp = tr(s + h, t), sm = tr(s - h, t), spp = tr(s + 2 * h, t), smm = tr(s - 2 * h, t);
  const auto tp = tr(s, t + h), tm = tr(s, t - h), tpp = tr(s, t + 2 * h), tmm = tr(s, t - 2 * h);
  const GenericFrame fr = generic_frame(family, s, t);
  for (int r = 0; r < 2; ++r) {
    const double ds = (-spp[r] + 8 * sp[r] - 8 * sm[r] + smm[r]) / (12 * h);
    const double dt = (-tpp[r] + 8 * tp[r] - 8 * tm[r] + tmm[r]) / (12 * h);
    for (int i = 0; i < 2; ++i) g.dtrace[r][i] = fr.c[i][0] * ds + fr.c[i][1] * dt;
  }
  g.nu = gauss_map(family, s, t);
  finish(g);
  return g;
}

GeometrySample geometry(const SurfaceFamily& family, double s, double t,
                        Path path, const Perturbation& p) {
  return path == Path::ClosedForm ? closed_form_geometry(family, s, t, p)
                                  : generic_geometry(family, s, t);
}

MovingFrame moving_frame(const SurfaceFamily& family, double s, double t,
                         Path path) {
  if (path == Path::ClosedForm) return closed_form_frame(family, s, t);
  return generic_coefficients(family, s, t).frame;
}

std::pair<Sym2, Sym2> second_fundamental(const SurfaceFamily& family, double s,
                                         double t, Path path) {
  if (path == Path::ClosedForm) {
    const CoefficientTable c = closed_form_coefficients(family, s);
    return {{c.h3_11.v, c.h3_12.v, c.h3_22.v}, {c.h4_11.v, c.h4_12.v, c.h4_22.v}};
  }
  const GeometrySample g = generic_coefficients(family, s, t);
  return {g.h3, g.h4};
}

std::pair<std::array<double, 2>, std::array<double, 2>> connection_forms(
    const SurfaceFamily& family, double s, double t, Path path) {
  if (path == Path::ClosedForm) {
    const CoefficientTable c = closed_form_coefficients(family, s);
    return {{c.om12_1.v, c.om12_2.v}, {c.om34_1.v, c.om34_2.v}};
  }
  const GeometrySample g = generic_coefficients(family, s, t);
  return {g.om12, g.om34};
}

std::pair<PseudoVector, double> mean_curvature(const GeometrySample& g) {
  const auto& e = g.frame.e;
  const auto& ep = g.frame.eps;
  const PseudoVector H =
      (0.5 * ep[2] * g.trace[0]) * e[2] + (0.5 * ep[3] * g.trace[1]) * e[3];
  return {H, inner(H, H)};
}

double squared_h(const GeometrySample& g) {
  const auto& ep = g.frame.eps;
  double sum = 0;
  for (int r = 0; r < 2; ++r) {
    const Sym2& h = r == 0 ? g.h3 : g.h4;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum += ep[i] * ep[j] * ep[2 + r] * h(i, j) * h(i, j);
  }
  return sum;
}

double normal_curvature_RD(const GeometrySample& g) {
  const auto& ep = g.frame.eps;
  double sum = 0;
  for (int i = 0; i < 2; ++i)
    sum += ep[i] * (g.h3(i, 1) * g.h4(i, 0) - g.h3(i, 0) * g.h4(i, 1));
  return sum;
}

std::array<PseudoVector, 2> normal_derivative_DH(const GeometrySample& g) {
  const auto& e = g.frame.e;
  const auto& ep = g.frame.eps;
  const double H3 = 0.5 * ep[2] * g.trace[0];
  const double H4 = 0.5 * ep[3] * g.trace[1];
  std::array<PseudoVector, 2> out;
  for (int i = 0; i < 2; ++i) {
    const double dH3 = 0.5 * ep[2] * g.dtrace[0][i];
    const double dH4 = 0.5 * ep[3] * g.dtrace[1][i];
    out[i] = (dH3 - H4 * ep[2] * g.om34[i]) * e[2] +
             (dH4 + H3 * ep[3] * g.om34[i]) * e[3];
  }
  return out;
}

std::array<PseudoVector, 2> normal_derivative_DH(const SurfaceFamily& family,
                                                 double s, double t, Path path) {
  return normal_derivative_DH(geometry(family, s, t, path));
}

std::array<double, 2> codazzi_residual(const SurfaceFamily& family, double s,
                                       double t, const Perturbation& p,
                                       double h) {
  (void)t;
  if (family.shape == Shape::Plane) return {0.0, 0.0};
  const CoefficientTable c = closed_form_coefficients(family, s, p);
  // Five-point stencil: the M-family tables grow like s^-3 near the axis,
  // where the three-point error at h = 1e-4 already reaches 1e-6.
  const CoefficientTable cp = closed_form_coefficients(family, s + h, p);
  const CoefficientTable cm = closed_form_coefficients(family, s - h, p);
  const CoefficientTable cpp = closed_form_coefficients(family, s + 2 * h, p);
  const CoefficientTable cmm = closed_form_coefficients(family, s - 2 * h, p);
  auto ds = [&](Dual<1> CoefficientTable::*field) {
    return (-(cpp.*field).v + 8 * (cp.*field).v - 8 * (cm.*field).v + (cmm.*field).v) /
           (12 * h);
  };
  const double h311 = c.h3_11.v, h322 = c.h3_22.v, h412 = c.h4_12.v;
  if (family.shape == Shape::DoubleRotational) {
    // e1 = d/ds
    const double lhs1 = ds(&CoefficientTable::h3_22);
    const double rhs1 = -c.om12_2.v * (h311 + h322) - h412 * c.om34_2.v;
    const double lhs2 = ds(&CoefficientTable::h4_12);
    const double rhs2 = -2 * h412 * c.om12_2.v + h311 * c.om34_2.v;
    return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
  }
  // e2 = (1/A) d/ds
  const double e = family.eps, es = family.eps_star;
  const double lhs1 = ds(&CoefficientTable::h3_11) / c.A.v;
  const double rhs1 = es * h412 * c.om34_1.v + c.om12_1.v * (es * h311 - e * h322);
  const double lhs2 = ds(&CoefficientTable::h4_12) / c.A.v;
  const double rhs2 = -e * h322 * c.om34_1.v + 2 * es * h412 * c.om12_1.v;
  return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
}

Bivector gauss_map(const SurfaceFamily& family, double s, double t) {
  const ImmersionJet jet = family.immersion_jet(s, t, 1);
  Bivector b = wedge(jet.rs(), jet.rt());
  const double g = bivector_inner(b, b);
  if (std::abs(g) < kTauReg * kTauReg)
    throw DegenerateError("gauss_map: degenerate tangent plane");
  b *= 1.0 / std::sqrt(std::abs(g));
  return hodge_complement(b, family.orientation);
}

Bivector laplacian_gauss_structural(const GeometrySample& g) {
  const auto& e = g.frame.e;
  const auto& ep = g.frame.eps;
  auto grad = [&](int r) {
    return (ep[0] * g.dtrace[r][0]) * e[0] + (ep[1] * g.dtrace[r][1]) * e[1];
  };
  Bivector out = g.norm_h2 * g.nu;
  out += (2 * ep[0] * ep[1] * g.RD) * wedge(e[0], e[1]);
  out += wedge(grad(0), e[3]);
  out += wedge(e[2], grad(1));
  for (int j = 0; j < 2; ++j) out += (2 * ep[j] * g.om34[j]) * wedge(g.H, e[j]);
  return out;
}

Bivector laplacian_gauss_structural(const SurfaceFamily& family, double s,
                                    double t, Path path) {
  return geometry(family, s, t, path).lap_nu;
}

namespace {

template <class V>
V coordinate_laplacian(const SurfaceFamily& f, double s, double t, double h,
                       const std::function<V(double, double)>& sample) {
  if (!f.contains(s - 2 * h, t - 2 * h) || !f.contains(s + 2 * h, t + 2 * h))
    throw RangeError("laplacian_fd: stencil outside the family domain");
  const ImmersionJet jet = f.immersion_jet(s, t, 2);
  const PseudoVector* d1[2] = {&jet.rs(), &jet.rt()};
  const PseudoVector* d2[2][2] = {{&jet.rss(), &jet.rst()},
                                  {&jet.rst(), &jet.rtt()}};
  double G[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) G[a][b] = inner(*d1[a], *d1[b]);
  const double det = G[0][0] * G[1][1] - G[0][1] * G[1][0];
  if (std::abs(det) < kTauReg * kTauReg)
    throw DegenerateError("laplacian_fd: degenerate metric");
  const double Gi[2][2] = {{G[1][1] / det, -G[0][1] / det},
                           {-G[1][0] / det, G[0][0] / det}};
  // Christoffel symbols Gamma^c_ab = G^cd <r_ab, r_d>.
  double Gamma[2][2][2];
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Gamma[c][a][b] = 0;
        for (int d = 0; d < 2; ++d)
          Gamma[c][a][b] += Gi[c][d] * inner(*d2[a][b], *d1[d]);
      }

  // Fourth-order central stencils on the 5x5 block around (s, t).
  static constexpr double w1[5] = {1, -8, 0, 8, -1};    // / 12h
  static constexpr double w2[5] = {-1, 16, -30, 16, -1};  // / 12h^2
  const V f0 = sample(s, t);
  V first[2] = {f0 * 0.0, f0 * 0.0};
  V second_ss = f0 * 0.0, second_tt = f0 * 0.0, second_st = f0 * 0.0;
  for (int k = 0; k < 5; ++k) {
    const double d = (k - 2) * h;
    if (k != 2) {
      const V fs = sample(s + d, t), ft = sample(s, t + d);
      first[0] += fs * (w1[k] / (12 * h));
      first[1] += ft * (w1[k] / (12 * h));
      second_ss += fs * (w2[k] / (12 * h * h));
      second_tt += ft * (w2[k] / (12 * h * h));
    }
    for (int l = 0; l < 5; ++l)
      if (k != 2 && l != 2)
        second_st += sample(s + d, t + (l - 2) * h) * (w1[k] * w1[l] / (144 * h * h));
  }
  second_ss += f0 * (w2[2] / (12 * h * h));
  second_tt += f0 * (w2[2] / (12 * h * h));
  const V* second[2][2] = {{&second_ss, &second_st}, {&second_st, &second_tt}};

  V out = f0 * 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      V term = *second[a][b];
      for (int c = 0; c < 2; ++c) term -= Gamma[c][a][b] * first[c];
      out -= Gi[a][b] * term;
    }
  return out;
}

}  // namespace

Bivector laplacian_gauss_fd(const SurfaceFamily& family, double s, double t,
                            double h) {
  return coordinate_laplacian<Bivector>(
      family, s, t, h, [&](double ss, double tt) { return gauss_map(family, ss, tt); });
}

PseudoVector laplacian_position_fd(const SurfaceFamily& family, double s,
                                   double t, double h) {
  return coordinate_laplacian<PseudoVector>(
      family, s, t, h,
      [&](double ss, double tt) { return family.immersion_jet(ss, tt, 0).r(); });
}

std::size_t Grid::unmasked() const {
  return static_cast<std::size_t>(std::count(masked.begin(), masked.end(), false));
}

Grid make_grid(const SurfaceFamily& family, const GridSpec& spec) {
  if (spec.ns < 1 || spec.nt < 1) throw UsageError("grid: counts must be >= 1");
  if (spec.s_lo > spec.s_hi || spec.t_lo > spec.t_hi)
    throw UsageError("grid: ranges must satisfy lo <= hi");
  if (!family.contains(spec.s_lo, spec.t_lo) || !family.contains(spec.s_hi, spec.t_hi))
    throw UsageError("grid: range leaves the family domain");
  Grid g;
  g.spec = spec;
  for (int i = 0; i < spec.ns; ++i) {
    const double s = spec.ns == 1 ? spec.s_lo
                                  : spec.s_lo + (spec.s_hi - spec.s_lo) * i / (spec.ns - 1.0);
    const auto [q, A] = regularity_scalars(family, s);
    for (int j = 0; j < spec.nt; ++j) {
      const double t = spec.nt == 1 ? spec.t_lo
                                    : spec.t_lo + (spec.t_hi - spec.t_lo) * j / (spec.nt - 1.0);
      g.s.push_back(s);
      g.t.push_back(t);
      g.masked.push_back(q < kTauReg || A < kTauReg);
    }
  }
  return g;
}

GridSpec default_grid(const SurfaceFamily& family, int n) {
  const FamilyDomain& d = family.domain;
  // Stay one FD step away from the domain boundary.
  const double ms = 0.05 * (d.s_hi - d.s_lo), mt = 0.05 * (d.t_hi - d.t_lo);
  return {d.s_lo + ms, d.s_hi - ms, n, d.t_lo + mt, d.t_hi - mt, n};
}

}  // namespace rotsurf
