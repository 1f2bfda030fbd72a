// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rotsurf/jets.hpp"

using namespace rotsurf;

TEST(ProfileJet, Examples) {
  const ProfileJet h = profile_jet(HyperbolicArcProfile{1}, 0);
  EXPECT_EQ(h.first[0], 1);
  EXPECT_EQ(h.first[1], 0);
  EXPECT_EQ(h.second[0], 0);
  EXPECT_EQ(h.second[1], 1);
  EXPECT_EQ(h.curvature(), 1);

  // first = s, second = b0 s^2.
  const ProfileJet p = profile_jet(PowerProfile{1, 2}, 0.2);
  EXPECT_NEAR(p.second[0], 0.04, 1e-15);
  EXPECT_NEAR(p.second[1], 0.4, 1e-15);
  EXPECT_NEAR(p.second[2], 2, 1e-15);

  for (double s : {-1.0, 0.0, 2.5}) EXPECT_EQ(profile_jet(LineProfile{0, 0, 1, 0}, s).curvature(), 0);
}

TEST(ProfileJet, ArcLengthIdentity) {
  const std::vector<ProfileCurve> arcs{HyperbolicArcProfile{1.7}, LineProfile{0.75, 2, 1.25, 1},
                                       fixture::zero_h_profile()};
  for (const ProfileCurve& c : arcs) {
    for (double s : {-0.6, -0.1, 0.0, 0.33, 0.6}) {
      const ProfileJet j = profile_jet(c, s);
      EXPECT_NEAR(j.speed_form(), -1, 1e-10) << profile_name(c) << " s=" << s;
      EXPECT_NEAR(j.first[1] * j.first[2] - j.second[1] * j.second[2], 0, 1e-10);
    }
  }
}

TEST(ProfileJet, OutsideDomainIsDomainError) {
  EXPECT_THROW(profile_jet(PowerProfile{1, 0.5}, -1), DomainError);
  EXPECT_THROW(profile_jet(fixture::zero_h_profile(), 5), DomainError);
}

TEST(ImmersionJet, DeSitterAtOrigin) {
  const SurfaceFamily f = make_family(DeSitterMinimalSpec{1, 1, 1});
  const ImmersionJet j = f.immersion_jet(0, 0, 2);
  EXPECT_EQ(j.r().coords, (std::array<double, 4>{1, 0, 0, 0}));
  EXPECT_EQ(j.rs().coords, (std::array<double, 4>{0, 0, 0, 1}));
  EXPECT_EQ(j.rt().coords, (std::array<double, 4>{0, 1, 0, 0}));
}

TEST(ImmersionJet, M2FirstPairOfRt) {
  // beta(s) = (s, 2s): r_t at t = 0 is (0, x, 0, b z).
  const SurfaceFamily f = make_family(M2Spec{1, LineProfile{1, 0, 2, 0}},
                                      FamilyDomain{0.5, 1.5, -1, 1});
  const ImmersionJet j = f.immersion_jet(0.8, 0, 1);
  EXPECT_EQ(j.rt()[0], 0);
  EXPECT_NEAR(j.rt()[1], 0.8, 1e-15);
}

TEST(FdPartial, Examples) {
  EXPECT_NEAR(fd_partial([](double s) { return s * s; }, 1, 1e-3, 0, 2), 2.0, 1e-9);
  EXPECT_EQ(fd_partial([](double) { return 4.2; }, 0.5, 1e-3, 0, 1), 0);
  EXPECT_THROW(fd_partial([](double s) { return s; }, 0.9995, 1e-3, 0, 1), RangeError);
}

// Each analytic partial against the central difference of the partial one
// order lower, in s and in t.
TEST(ImmersionJet, MatchesFiniteDifferencesOnEveryFamily) {
  const double h = 1e-4;
  for (const auto& nf : fixture::catalog()) {
    const SurfaceFamily& f = nf.family;
    for (const auto& [s, t] : fixture::random_points(f, 100, 17)) {
      const ImmersionJet j = f.immersion_jet(s, t, 3);
      for (int i = 0; i <= 2; ++i) {
        for (int k = 0; i + k <= 2; ++k) {
          auto in_s = [&](double x) { return f.immersion_jet(x, t, 3).partial(i, k); };
          auto in_t = [&](double x) { return f.immersion_jet(s, x, 3).partial(i, k); };
          const PseudoVector ds = fd_partial_vec<PseudoVector>(in_s, s, h, f.domain.s_lo, f.domain.s_hi);
          const PseudoVector dt = fd_partial_vec<PseudoVector>(in_t, t, h, f.domain.t_lo, f.domain.t_hi);
          const PseudoVector& as = j.partial(i + 1, k);
          const PseudoVector& at = j.partial(i, k + 1);
          const double scale_s = std::max(1.0, as.aux_norm()), scale_t = std::max(1.0, at.aux_norm());
          ASSERT_LE((ds - as).aux_norm() / scale_s, 1e-6) << nf.label << " d/ds of (" << i << "," << k << ")";
          ASSERT_LE((dt - at).aux_norm() / scale_t, 1e-6) << nf.label << " d/dt of (" << i << "," << k << ")";
        }
      }
      // Mixed partials are one entry.
      EXPECT_EQ(&j.rst(), &j.rts());
    }
  }
}
