// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <numbers>

#include "fixtures.hpp"

using namespace rotsurf;

TEST(MakeFamily, Examples) {
  const SurfaceFamily d = make_family(DeSitterMinimalSpec{1, 1, 2});
  EXPECT_EQ(d.ambient_index, 1);
  const SurfaceFamily m = make_family(M1Spec{2, PowerProfile{1, 2}}, FamilyDomain{0.05, 0.45, -1, 1});
  EXPECT_EQ(m.eps * m.eps_star, -1);
  EXPECT_THROW(make_family(M1Spec{1, ConicProfile{0, 2}}), UsageError);
}

TEST(MakeFamily, RejectsInvalidParameters) {
  EXPECT_THROW(make_family(M1Spec{0, PowerProfile{1, 2}}), UsageError);
  EXPECT_THROW(make_family(M2Spec{-1, PowerProfile{1, 2}}), UsageError);
  EXPECT_THROW(make_family(DeSitterMinimalSpec{0, 1, 1}), UsageError);
  EXPECT_THROW(make_family(ConeSpec{1.5}), UsageError);
  EXPECT_THROW(make_family(DoubleRotationalSpec{1, 1, LineProfile{1, 0, 1, 0}}), UsageError);
  // A^2 = |4 s^2 - 1| vanishes at s = 1/2.
  EXPECT_THROW(make_family(M1Spec{2, PowerProfile{1, 2}}, FamilyDomain{0.1, 0.6, -1, 1}), UsageError);
  EXPECT_THROW(make_family(PlaneSpec{3, 1}), UsageError);
}

TEST(Conic, Examples) {
  const ProfileJet j = conic_profile_parametrize(1, 2, std::numbers::pi / 4, ConicBranch::Trigonometric);
  EXPECT_NEAR(j.first[0], 1, 1e-15);
  EXPECT_NEAR(j.second[0], 0, 1e-15);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(-3, 3);
  for (int k = 0; k < 100; ++k) {
    const double theta = th(rng);
    for (auto [l, m, br] : {std::tuple{1.0, 2.0, ConicBranch::Trigonometric},
                            std::tuple{3.0, 0.5, ConicBranch::Trigonometric},
                            std::tuple{-1.0, 1.0, ConicBranch::Hyperbolic}}) {
      const ProfileJet c = conic_profile_parametrize(l, m, theta, br);
      const double w = c.first[0], y = c.second[0];
      EXPECT_NEAR((w + y) * (w + y) + l * (w - y) * (w - y) - m, 0, 1e-12 * std::max(1.0, w * w + y * y));
    }
  }
  const ProfileJet h = conic_profile_parametrize(-1, 1, 0.7, ConicBranch::Hyperbolic);
  const double u = h.first[0] + h.second[0], v = h.first[0] - h.second[0];
  EXPECT_NEAR(u, std::cosh(0.7), 1e-15);
  EXPECT_NEAR(u * u - v * v, 1, 1e-14);
  EXPECT_THROW(conic_profile_parametrize(-1, 1, 0.1, ConicBranch::Trigonometric), UsageError);
}

TEST(ZeroMeanOde, FirstStepByHand) {
  const OdeProfile p = zero_mean_profile_ode(1, 1, 1, 0, 0, {-0.1, 0.1}, 1e-3);
  const OdeState y = p.curve->state_at(1e-3);
  EXPECT_NEAR(y.phi, -1e-3, 1e-6);
  EXPECT_NEAR(y.x * y.x - y.w * y.w, 1, 1e-2);
  // Not the hyperbolic arc: phi stays 0 there.
  EXPECT_GT(std::abs(p.curve->state_at(0.1).phi), 0.05);
}

TEST(ZeroMeanOde, ZeroMeanCurvatureAndNonflatNormalBundle) {
  const SurfaceFamily f = make_family(DoubleRotationalSpec{1, 1, fixture::zero_h_profile()});
  for (const auto& [s, t] : fixture::random_points(f, 100, 9)) {
    const GeometrySample g = closed_form_geometry(f, s, t);
    EXPECT_LE(std::abs(g.h3.m11 - g.h3.m22), 1e-6);
    EXPECT_GT(std::abs(g.RD), 0.01);
    EXPECT_NEAR(g.RD, 2 * g.h3.m11 * g.h4.m12, 1e-12);
  }
  EXPECT_LE(fixture::zero_h_profile().curve->tabulated_mean_curvature_residual(), 1e-6);
}

TEST(ZeroMeanOde, FourthOrderConvergence) {
  auto residual = [](double step) {
    return zero_mean_profile_ode(1, 1, 1, 0, 0, {-0.7, 0.7}, step).curve->tabulated_mean_curvature_residual();
  };
  const double coarse = residual(0.02), fine = residual(0.01);
  EXPECT_GE(coarse / fine, 12) << coarse << " vs " << fine;
}

TEST(ZeroMeanOde, Errors) {
  EXPECT_THROW(zero_mean_profile_ode(1, 1, 0, 0, 0, {-1, 1}), UsageError);
  // The straight line x = 0, w = s - 1/2 runs into the rotation axis.
  try {
    zero_mean_profile_ode(1, 1, 0, -0.5, 0, {-1, 1});
    FAIL() << "expected IntegrationHalt";
  } catch (const IntegrationHalt& h) {
    EXPECT_FALSE(h.partial().empty());
    EXPECT_LT(h.partial().back().s, 0.5);
  }
}

TEST(ClosedForm, Examples) {
  const SurfaceFamily d = make_family(DeSitterMinimalSpec{1, 1, 1});
  const double c = std::cosh(1.0), s = std::sinh(1.0);
  EXPECT_NEAR(closed_form_coefficients(d, 1).h4_12.v, 1 / (c * c + s * s), 1e-15);
  EXPECT_NEAR(closed_form_coefficients(d, 1).h4_12.v, 0.2658, 1e-4);

  const SurfaceFamily m = make_family(M1Spec{1.5, PowerProfile{1, 2}}, FamilyDomain{0.1, 0.3, -1, 1});
  const CoefficientTable t = closed_form_coefficients(m, 0.2);
  EXPECT_EQ(t.om12_2.v, 0);
  EXPECT_EQ(t.om34_2.v, 0);

  const SurfaceFamily k = make_family(ConeSpec{});
  for (double x : {0.0, 0.5, 1.0}) {
    const CoefficientTable ct = closed_form_coefficients(k, x);
    EXPECT_EQ(ct.h3_11.v, 0);
    EXPECT_EQ(ct.h4_11.v, 0);
    EXPECT_EQ(ct.h4_12.v, 0);
    EXPECT_EQ(ct.h4_22.v, 0);
  }
}

TEST(ClosedForm, VanishingEntriesOnEveryFamily) {
  for (const auto& nf : fixture::catalog()) {
    for (const auto& [s, t] : fixture::random_points(nf.family, 20, 4)) {
      const CoefficientTable c = closed_form_coefficients(nf.family, s);
      EXPECT_EQ(c.h3_12.v, 0) << nf.label;
      EXPECT_EQ(c.h4_11.v, 0) << nf.label;
      EXPECT_EQ(c.h4_22.v, 0) << nf.label;
    }
  }
}

TEST(Power, VanishingConditionAndEqualMagnitudes) {
  const SurfaceFamily f = make_family(M1Spec{2, PowerProfile{1, 2}});
  for (const auto& [s, t] : fixture::random_points(f, 50, 8)) {
    const ProfileJet j = f.profile_jet(s);
    const double w = j.first[0], dw = j.first[1], y = j.second[0], dy = j.second[1];
    EXPECT_NEAR(4 * y * y * dw * dw - w * w * dy * dy, 0, 1e-14);
    const GeometrySample g = closed_form_geometry(f, s, t);
    EXPECT_LE(std::abs(std::abs(g.h4.m12) - std::abs(g.h3.m11)), 1e-10);
    EXPECT_LT(g.H.aux_norm(), 1e-10);
    EXPECT_EQ(g.eps * g.eps_star, -1);
  }
}

TEST(Conic, M1IsMinimalWithLinkedCoefficients) {
  const SurfaceFamily f = make_family(M1Spec{1, ConicProfile{1, 2}});
  const double ee = f.eps * f.eps_star;
  for (const auto& [s, t] : fixture::random_points(f, 50, 12, 0)) {
    const GeometrySample g = closed_form_geometry(f, s, t);
    EXPECT_LE(g.H.aux_norm(), 1e-8);
    EXPECT_LE(std::abs(g.h4.m12 + ee * g.h3.m11), 1e-8);
  }
}

TEST(Vranceanu, ValidM1Profile) {
  const SurfaceFamily f = make_family(M1Spec{1, VranceanuProfile{1, 0.1}}, FamilyDomain{0, 1, -1, 1});
  const MovingFrame fr = closed_form_frame(f, 0.5, 0.2);
  EXPECT_LE(fr.orthonormality_defect(), 1e-12);
  EXPECT_EQ(profile_name(f.profile).substr(0, 9), "vranceanu");
}

TEST(Perturbation, ShiftsOnlyTheNamedField) {
  const SurfaceFamily f = make_family(M1Spec{1, ConicProfile{1, 2}});
  const CoefficientTable a = closed_form_coefficients(f, 0.7);
  const CoefficientTable b = closed_form_coefficients(f, 0.7, {CoefficientField::Om34_1, 1e-3});
  EXPECT_NEAR(b.om34_1.v - a.om34_1.v, 1e-3, 1e-15);
  EXPECT_EQ(b.h3_11.v, a.h3_11.v);
  EXPECT_EQ(coefficient_field_from_string(to_string(CoefficientField::H4_12)), CoefficientField::H4_12);
  EXPECT_THROW(coefficient_field_from_string("h5_11"), UsageError);
}
