// SPDX-License-Identifier: Apache-2.0
#include "rotsurf/classifier.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace rotsurf {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Harmonic: return "harmonic";
    case Verdict::FirstKind: return "first_kind";
    case Verdict::SecondKind: return "second_kind";
    case Verdict::NotPointwise1Type: return "not_pointwise_1_type";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::Harmonic, Verdict::FirstKind, Verdict::SecondKind,
                    Verdict::NotPointwise1Type})
    if (s == to_string(v)) return v;
  throw UsageError("unknown verdict '" + s + "'");
}

namespace {

// Euclidean norm of the 15 minors a_i b_j - a_j b_i.
double minors_norm(const Bivector& a, const Bivector& b) {
  double sum = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const double m = a[i] * b[j] - a[j] * b[i];
      sum += m * m;
    }
  return std::sqrt(sum);
}

}  // namespace

double parallel_residual(const Bivector& nu, const Bivector& lap_nu,
                         double tau_harm) {
  const double nl = lap_nu.aux_norm();
  if (nl < tau_harm) return 0.0;
  const double nn = nu.aux_norm();
  if (nn == 0.0) return 1.0;
  return minors_norm(lap_nu, nu) / (nl * nn);
}

ConstantFit solve_constant_C(const std::vector<Bivector>& nu,
                             const std::vector<Bivector>& lap_nu,
                             double tau_harm) {
  if (nu.size() != lap_nu.size())
    throw UsageError("solve_constant_C: nu and lap_nu differ in length");
  if (nu.size() < 25) throw UsageError("solve_constant_C: needs at least 25 samples");
  std::vector<std::size_t> active;
  for (std::size_t p = 0; p < nu.size(); ++p)
    if (lap_nu[p].aux_norm() >= tau_harm) active.push_back(p);
  if (active.empty())
    throw UsageError("solve_constant_C: every Laplacian sample is harmonic");

  Eigen::MatrixXd M(15 * active.size(), 6);
  Eigen::VectorXd rhs(15 * active.size());
  int row = 0;
  for (std::size_t p : active) {
    const Bivector& L = lap_nu[p];
    const Bivector& N = nu[p];
    const double w = 1.0 / L.aux_norm();
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        M.row(row).setZero();
        M(row, j) = w * L[i];
        M(row, i) = -w * L[j];
        rhs(row) = -w * (L[i] * N[j] - L[j] * N[i]);
        ++row;
      }
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(M);
  cod.setThreshold(1e-10);
  const Eigen::VectorXd c = cod.solve(rhs);

  ConstantFit fit;
  fit.C = Bivector({c(0), c(1), c(2), c(3), c(4), c(5)}, nu.front().ambient_index);
  fit.rank = static_cast<int>(cod.rank());
  fit.unique = fit.rank == 6;
  for (std::size_t p : active)
    fit.ls_residual = std::max(fit.ls_residual,
                               parallel_residual(nu[p] + fit.C, lap_nu[p], tau_harm));
  return fit;
}

FValue recover_f(const Bivector& nu, const Bivector& lap_nu, const Bivector& C,
                 double tau_fit) {
  const Bivector v = nu + C;
  if (v.aux_norm() < kTauReg) throw DegenerateError("recover_f: nu + C vanishes");
  int k = 0;
  for (int i = 1; i < 6; ++i)
    if (std::abs(v[i]) > std::abs(v[k])) k = i;
  FValue out;
  out.f = lap_nu[k] / v[k];
  const double scale = lap_nu.aux_norm();
  if (scale == 0.0) return out;
  for (int i = 0; i < 6; ++i)
    if (std::abs(v[i]) > 0.1 * std::abs(v[k]))
      out.mismatch = std::max(out.mismatch, std::abs(lap_nu[i] - out.f * v[i]) / scale);
  out.consistent = out.mismatch <= tau_fit;
  return out;
}

std::array<double, 6> frame_components(const Bivector& C, const MovingFrame& f) {
  std::array<double, 6> out{};
  for (int k = 0; k < 6; ++k)
    out[k] = bivector_inner(C, wedge(f.e[kPairs[k].first], f.e[kPairs[k].second]));
  return out;
}

std::array<double, 6> expansion_coefficients(const Bivector& C,
                                             const MovingFrame& f) {
  std::array<double, 6> out = frame_components(C, f);
  for (int k = 0; k < 6; ++k) out[k] *= f.eps[kPairs[k].first] * f.eps[kPairs[k].second];
  return out;
}

std::array<double, 6> constancy_rhs(const GeometrySample& g, int i,
                                    const std::array<double, 6>& c) {
  const auto& e = g.frame.eps;
  const double e1 = e[0], e2 = e[1], e3 = e[2], e4 = e[3];
  // h^r_{i j} with 0-based i, j
  auto h3 = [&](int j) { return g.h3(i, j); };
  auto h4 = [&](int j) { return g.h4(i, j); };
  const double w12 = g.om12[i], w34 = g.om34[i];
  const double C12 = c[0], C13 = c[1], C14 = c[2], C23 = c[3], C24 = c[4], C34 = c[5];
  return {
      e3 * h3(1) * C13 + e4 * h4(1) * C14 - e3 * h3(0) * C23 - e4 * h4(0) * C24,
      -e2 * h3(1) * C12 + e4 * w34 * C14 + e2 * w12 * C23 - e4 * h4(0) * C34,
      -e2 * h4(1) * C12 - e3 * w34 * C13 + e2 * w12 * C24 + e3 * h3(0) * C34,
      e1 * h3(0) * C12 - e1 * w12 * C13 + e4 * w34 * C24 - e4 * h4(1) * C34,
      e1 * h4(0) * C12 - e1 * w12 * C14 - e3 * w34 * C23 + e3 * h3(1) * C34,
      e1 * h4(0) * C13 - e1 * h3(0) * C14 + e2 * h4(1) * C23 - e2 * h3(1) * C24};
}

double constancy_residual(const SurfaceFamily& family,
                          const std::function<Bivector(double, double)>& C,
                          const std::vector<std::array<double, 2>>& points,
                          Path path, double h) {
  double worst = 0;
  std::size_t used = 0;
  for (const auto& pt : points) {
    const double s = pt[0], t = pt[1];
    if (!family.contains(s - h, t - h) || !family.contains(s + h, t + h)) continue;
    const GeometrySample g = geometry(family, s, t, path);
    auto comps = [&](double ss, double tt) {
      return frame_components(C(ss, tt), moving_frame(family, ss, tt, path));
    };
    const auto sp = comps(s + h, t), sm = comps(s - h, t);
    const auto tp = comps(s, t + h), tm = comps(s, t - h);
    const auto c0 = comps(s, t);

    // e_i = a_i r_s + b_i r_t
    const ImmersionJet jet = family.immersion_jet(s, t, 1);
    const double G11 = inner(jet.rs(), jet.rs()), G12 = inner(jet.rs(), jet.rt()),
                 G22 = inner(jet.rt(), jet.rt());
    const double det = G11 * G22 - G12 * G12;
    for (int i = 0; i < 2; ++i) {
      const double b1 = inner(g.frame.e[i], jet.rs()), b2 = inner(g.frame.e[i], jet.rt());
      const double a = (G22 * b1 - G12 * b2) / det, b = (G11 * b2 - G12 * b1) / det;
      const auto rhs = constancy_rhs(g, i, c0);
      for (int k = 0; k < 6; ++k) {
        const double lhs = a * (sp[k] - sm[k]) / (2 * h) + b * (tp[k] - tm[k]) / (2 * h);
        worst = std::max(worst, std::abs(lhs - rhs[k]));
      }
    }
    ++used;
  }
  if (used == 0) throw RangeError("constancy_residual: no interior points");
  return worst;
}

double constancy_residual(const SurfaceFamily& family, const Bivector& C,
                          const std::vector<std::array<double, 2>>& points,
                          Path path, double h) {
  return constancy_residual(
      family, [&C](double, double) { return C; }, points, path, h);
}

ClassificationResult classify_samples(
    const std::vector<Bivector>& nu, const std::vector<Bivector>& lap_nu,
    const Tolerances& tol,
    const std::function<double(const Bivector&)>& constancy) {
  if (nu.size() < 25) throw UsageError("classify: needs at least 25 unmasked points");
  ClassificationResult r;
  const int T = nu.front().ambient_index;
  r.C = Bivector({0, 0, 0, 0, 0, 0}, T);
  std::size_t harmonic = 0;
  for (std::size_t p = 0; p < nu.size(); ++p) {
    const double n = lap_nu[p].aux_norm();
    r.max_lap_norm = std::max(r.max_lap_norm, n);
    if (n < tol.tau_harm) ++harmonic;
    r.parallel_max = std::max(r.parallel_max, parallel_residual(nu[p], lap_nu[p], tol.tau_harm));
  }
  r.harmonic_fraction = static_cast<double>(harmonic) / nu.size();
  r.f_small_flag = r.harmonic_fraction > 0.5;

  auto fill_f = [&](const Bivector& C) {
    r.f_values.clear();
    r.f_consistent.clear();
    for (std::size_t p = 0; p < nu.size(); ++p) {
      try {
        const FValue fv = recover_f(nu[p], lap_nu[p], C, tol.tau_fit);
        r.f_values.push_back(fv.f);
        r.f_consistent.push_back(fv.consistent);
      } catch (const DegenerateError&) {
        r.f_values.push_back(std::nan(""));
        r.f_consistent.push_back(false);
      }
    }
  };

  if (r.max_lap_norm < tol.tau_harm) {
    r.verdict = Verdict::Harmonic;
    r.f_values.assign(nu.size(), 0.0);
    r.f_consistent.assign(nu.size(), true);
    return r;
  }
  if (r.parallel_max < tol.tau_fit) {
    r.verdict = Verdict::FirstKind;
    fill_f(r.C);
    return r;
  }
  const ConstantFit fit = solve_constant_C(nu, lap_nu, tol.tau_harm);
  r.C = fit.C;
  r.rank = fit.rank;
  r.ls_residual = fit.ls_residual;
  r.constancy = constancy ? constancy(fit.C) : 0.0;
  const bool second = fit.ls_residual < tol.tau_fit && r.constancy < tol.tau_const &&
                      fit.C.aux_norm() > tol.tau_C;
  r.verdict = second ? Verdict::SecondKind : Verdict::NotPointwise1Type;
  fill_f(r.C);
  return r;
}

ClassificationResult classify(const SurfaceFamily& family, const Grid& grid,
                              const ClassifyOptions& opt) {
  std::vector<Bivector> nu, lap;
  std::vector<std::array<double, 2>> points;
  std::vector<MovingFrame> frames;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid.masked[k]) continue;
    const double s = grid.s[k], t = grid.t[k];
    const GeometrySample g = geometry(family, s, t, opt.path, opt.perturbation);
    nu.push_back(g.nu);
    lap.push_back(opt.laplacian == LaplacianSource::Structural
                      ? g.lap_nu
                      : laplacian_gauss_fd(family, s, t));
    points.push_back({s, t});
    frames.push_back(g.frame);
  }
  if (points.size() < 25)
    throw UsageError("classify: needs at least 25 unmasked grid points");
  ClassificationResult r = classify_samples(
      nu, lap, opt.tol, [&](const Bivector& C) {
        return constancy_residual(family, C, points, opt.path);
      });
  r.points = points;
  for (const MovingFrame& f : frames) {
    r.C_frame.push_back(frame_components(r.C, f));
    r.C_expansion.push_back(expansion_coefficients(r.C, f));
  }
  return r;
}

}  // namespace rotsurf
