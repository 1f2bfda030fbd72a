// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rotsurf/classifier.hpp"

using namespace rotsurf;
using fixture::catalog;

namespace {

ClassificationResult run(const SurfaceFamily& f, int n = 11,
                         LaplacianSource src = LaplacianSource::Structural) {
  ClassifyOptions o;
  o.laplacian = src;
  if (src == LaplacianSource::FiniteDifference) o.tol.tau_fit = kTauFitFd;
  return classify(f, make_grid(f, default_grid(f, n)), o);
}

// C_AB for any ordered pair, antisymmetric.
double pair_value(const std::array<double, 6>& c, int a, int b) {
  if (a == b) return 0;
  return a < b ? c[pair_index(a, b)] : -c[pair_index(b, a)];
}

// omega_AB(e_i) for the full frame; omega_jr(e_i) = h^r_ij.
double omega(const GeometrySample& g, int a, int b, int i) {
  if (a == b) return 0;
  if (a > b) return -omega(g, b, a, i);
  if (a == 0 && b == 1) return g.om12[i];
  if (a == 2 && b == 3) return g.om34[i];
  const Sym2& h = b == 2 ? g.h3 : g.h4;
  return h(a, i);
}

}  // namespace

TEST(ParallelResidual, Examples) {
  const Bivector nu({1, 0, 0, 0, 0, 0}, 1);
  EXPECT_EQ(parallel_residual(nu, 3.0 * nu), 0);
  EXPECT_NEAR(parallel_residual(nu, Bivector({0, 1, 0, 0, 0, 0}, 1)), 1, 1e-15);
  EXPECT_EQ(parallel_residual(nu, Bivector({0, 1e-12, 0, 0, 0, 0}, 1)), 0);
  const SurfaceFamily d = make_family(DeSitterMinimalSpec{1, 1, 2});
  for (const auto& [s, t] : fixture::random_points(d, 50, 1)) {
    const GeometrySample g = closed_form_geometry(d, s, t);
    EXPECT_LT(parallel_residual(g.nu, g.lap_nu), 1e-8);
  }
}

TEST(SolveConstantC, SyntheticRecovery) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> fpick(0.5, 2.0);
  const SurfaceFamily fam = make_family(DeSitterMinimalSpec{1, 1, 2});
  const Grid grid = make_grid(fam, default_grid(fam, 6));
  const Bivector C0({n(rng), n(rng), n(rng), n(rng), n(rng), n(rng)}, 1);
  std::vector<Bivector> nu, lap;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    nu.push_back(gauss_map(fam, grid.s[k], grid.t[k]));
    lap.push_back(fpick(rng) * (nu.back() + C0));
  }
  const ConstantFit fit = solve_constant_C(nu, lap);
  EXPECT_LE((fit.C - C0).aux_norm(), 1e-10);
  EXPECT_EQ(fit.rank, 6);
  EXPECT_LT(fit.ls_residual, 1e-10);
}

TEST(SolveConstantC, Errors) {
  std::vector<Bivector> few(10, Bivector({1, 0, 0, 0, 0, 0}, 1));
  EXPECT_THROW(solve_constant_C(few, few), UsageError);
  std::vector<Bivector> nu(30, Bivector({1, 0, 0, 0, 0, 0}, 1)), zero(30, Bivector({}, 1));
  EXPECT_THROW(solve_constant_C(nu, zero), UsageError);
}

TEST(SolveConstantC, ConicAndConeWitnesses) {
  const SurfaceFamily m = make_family(M1Spec{1, ConicProfile{1, 2}});
  const ClassificationResult r = run(m);
  const double ee = m.eps * m.eps_star;
  for (const auto& c : r.C_frame) {
    EXPECT_NEAR(c[0], -0.5, 1e-4);
    EXPECT_NEAR(c[5], -ee / 2, 1e-4);
  }
  const ClassificationResult k = run(make_family(ConeSpec{}));
  EXPECT_GT(k.ls_residual, 1e-5);
}

TEST(RecoverF, Examples) {
  const SurfaceFamily d = make_family(DeSitterMinimalSpec{1, 1, 2});
  const GeometrySample g = closed_form_geometry(d, 0, 0);
  const Bivector zero({}, 1);
  EXPECT_NEAR(recover_f(g.nu, g.lap_nu, zero).f, -6, 1e-12);
  EXPECT_EQ(recover_f(g.nu, zero, zero).f, 0);
  EXPECT_THROW(recover_f(g.nu, g.lap_nu, -1.0 * g.nu), DegenerateError);

  const SurfaceFamily m = make_family(M1Spec{1, ConicProfile{1, 2}});
  const ClassificationResult r = run(m);
  for (std::size_t p = 0; p < r.points.size(); ++p) {
    const GeometrySample s = closed_form_geometry(m, r.points[p][0], r.points[p][1]);
    const double ref = -8 * m.eps * s.h3.m22 * s.h3.m22;
    EXPECT_LE(std::abs(r.f_values[p] - ref) / std::abs(ref), 1e-6);
    EXPECT_TRUE(r.f_consistent[p]);
  }
}

TEST(Constancy, ExplicitEquationsMatchGeneralForm) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> n;
  for (const auto& nf : catalog()) {
    for (const auto& [s, t] : fixture::random_points(nf.family, 5, 3)) {
      const GeometrySample g = closed_form_geometry(nf.family, s, t);
      const std::array<double, 6> c{n(rng), n(rng), n(rng), n(rng), n(rng), n(rng)};
      for (int i = 0; i < 2; ++i) {
        const auto rhs = constancy_rhs(g, i, c);
        for (int k = 0; k < 6; ++k) {
          const auto [A, B] = kPairs[k];
          double general = 0;
          for (int D = 0; D < 4; ++D)
            general += g.frame.eps[D] * (omega(g, A, D, i) * pair_value(c, D, B) +
                                         omega(g, B, D, i) * pair_value(c, A, D));
          EXPECT_NEAR(rhs[k], general, 1e-12 * std::max(1.0, std::abs(general)))
              << nf.label << " i=" << i << " pair " << k;
        }
      }
    }
  }
}

TEST(Constancy, Examples) {
  const SurfaceFamily m = make_family(M1Spec{2, PowerProfile{1, 2}});
  const ClassificationResult r = run(m);
  EXPECT_LT(constancy_residual(m, r.C, r.points), 1e-4);
  const double naive = constancy_residual(
      m,
      [&](double s, double t) {
        const MovingFrame f = moving_frame(m, s, t);
        return wedge(f.e[0], f.e[1]);
      },
      r.points);
  EXPECT_GT(naive, 0.01);
  const SurfaceFamily p = make_family(PlaneSpec{});
  const Grid g = make_grid(p, default_grid(p));
  std::vector<std::array<double, 2>> pts;
  for (std::size_t k = 0; k < g.size(); ++k) pts.push_back({g.s[k], g.t[k]});
  EXPECT_LT(constancy_residual(p, Bivector({1, -2, 3, 0.5, 7, -1}, 1), pts), 1e-10);
  EXPECT_THROW(constancy_residual(p, Bivector({}, 1), {{1.0, 1.0}}), RangeError);
}

TEST(Classify, Examples) {
  EXPECT_EQ(run(make_family(PlaneSpec{})).verdict, Verdict::Harmonic);
  const ClassificationResult d = run(make_family(DeSitterMinimalSpec{1, 1, 2}));
  EXPECT_EQ(d.verdict, Verdict::FirstKind);
  EXPECT_EQ(d.C.aux_norm(), 0);
  const ClassificationResult z = run(make_family(DoubleRotationalSpec{1, 1, fixture::zero_h_profile()}));
  EXPECT_EQ(z.verdict, Verdict::NotPointwise1Type);
}

TEST(Classify, FiniteDifferenceLaplacianAgrees) {
  EXPECT_EQ(run(make_family(DeSitterMinimalSpec{1, 1, 2}), 11, LaplacianSource::FiniteDifference).verdict,
            Verdict::FirstKind);
  EXPECT_EQ(run(make_family(M1Spec{1, ConicProfile{1, 2}}), 11, LaplacianSource::FiniteDifference).verdict,
            Verdict::SecondKind);
  EXPECT_EQ(run(make_family(ConeSpec{}), 11, LaplacianSource::FiniteDifference).verdict,
            Verdict::NotPointwise1Type);
}

// Criterion 10 on Gauss-map fields of real grids, so the constancy
// certificate has a geometry to run on.
TEST(Classify, SyntheticRoundTrip) {
  std::vector<fixture::NamedFamily> fams;
  for (auto& nf : catalog())
    if (nf.family.shape != Shape::Plane) fams.push_back(nf);
  std::mt19937_64 rng(99);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> mag(0.5, 3.0);
  std::bernoulli_distribution sign;
  for (int k = 0; k < 200; ++k) {
    const SurfaceFamily& f = fams[k % fams.size()].family;
    const Grid grid = make_grid(f, default_grid(f, 7));
    const Bivector C({n(rng), n(rng), n(rng), n(rng), n(rng), n(rng)}, f.ambient_index);
    std::vector<Bivector> nu, lap;
    std::vector<double> fs;
    std::vector<std::array<double, 2>> pts;
    for (std::size_t p = 0; p < grid.size(); ++p) {
      nu.push_back(gauss_map(f, grid.s[p], grid.t[p]));
      fs.push_back((sign(rng) ? 1 : -1) * mag(rng));
      lap.push_back(fs.back() * (nu.back() + C));
      pts.push_back({grid.s[p], grid.t[p]});
    }
    const ClassificationResult r = classify_samples(
        nu, lap, {}, [&](const Bivector& c) { return constancy_residual(f, c, pts); });
    ASSERT_EQ(r.verdict, Verdict::SecondKind) << "instance " << k;
    ASSERT_LE((r.C - C).aux_norm(), 1e-8) << "instance " << k;
    for (std::size_t p = 0; p < fs.size(); ++p)
      ASSERT_LE(std::abs(r.f_values[p] - fs[p]) / std::abs(fs[p]), 1e-8) << "instance " << k;
    ASSERT_LT(r.constancy, 1e-3);
  }
}

TEST(Classify, ScaleInvariance) {
  const SurfaceFamily m = make_family(M1Spec{1, ConicProfile{1, 2}});
  const Grid grid = make_grid(m, default_grid(m));
  std::vector<Bivector> nu, lap, lap3;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const GeometrySample g = closed_form_geometry(m, grid.s[p], grid.t[p]);
    nu.push_back(g.nu);
    lap.push_back(g.lap_nu);
    lap3.push_back(3.7 * g.lap_nu);
  }
  const auto a = classify_samples(nu, lap, {}), b = classify_samples(nu, lap3, {});
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_LE((a.C - b.C).aux_norm(), 1e-9);
  for (std::size_t p = 0; p < a.f_values.size(); ++p) EXPECT_NEAR(b.f_values[p], 3.7 * a.f_values[p], 1e-8 * std::abs(b.f_values[p]));
}

TEST(Classify, VerdictStableUnderRefinement) {
  for (const auto& nf : catalog())
    EXPECT_EQ(run(nf.family, 11).verdict, run(nf.family, 41).verdict) << nf.label;
}

TEST(Classify, NegativeFamiliesNeverPointwise) {
  for (FamilySpec spec : {FamilySpec{ConeSpec{}}, FamilySpec{ConeSpec{-0.3, 2}},
                          FamilySpec{DoubleRotationalSpec{1, 1, fixture::zero_h_profile()}},
                          FamilySpec{DoubleRotationalSpec{
                              2, 1, zero_mean_profile_ode(2, 1, 1, 0.2, 0.1, {-0.5, 0.5})}}}) {
    const Verdict v = run(make_family(spec)).verdict;
    EXPECT_NE(v, Verdict::FirstKind);
    EXPECT_NE(v, Verdict::SecondKind);
  }
}

TEST(Classify, MostlyHarmonicGridIsFlagged) {
  std::vector<Bivector> nu, lap;
  const SurfaceFamily d = make_family(DeSitterMinimalSpec{1, 1, 2});
  const Grid g = make_grid(d, default_grid(d, 6));
  for (std::size_t p = 0; p < g.size(); ++p) {
    const GeometrySample s = closed_form_geometry(d, g.s[p], g.t[p]);
    nu.push_back(s.nu);
    lap.push_back(p % 3 == 0 ? s.lap_nu : Bivector({}, 1));
  }
  const auto r = classify_samples(nu, lap, {});
  EXPECT_TRUE(r.f_small_flag);
  EXPECT_GT(r.harmonic_fraction, 0.5);
}

TEST(Verdict, StringRoundTrip) {
  for (Verdict v : {Verdict::Harmonic, Verdict::FirstKind, Verdict::SecondKind, Verdict::NotPointwise1Type})
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  EXPECT_THROW(verdict_from_string("third_kind"), UsageError);
}
