// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "rotsurf/pseudo_linalg.hpp"
#include "rotsurf/surface_geometry.hpp"

using namespace rotsurf;

namespace {

PseudoVector v(double a, double b, double c, double d, int t) { return PseudoVector({a, b, c, d}, t); }

PseudoVector random_vector(std::mt19937_64& rng, int t) {
  std::normal_distribution<double> n;
  return v(n(rng), n(rng), n(rng), n(rng), t);
}

}  // namespace

TEST(Inner, SignatureExamples) {
  EXPECT_EQ(inner(v(0, 0, 0, 1, 1), v(0, 0, 0, 1, 1)), -1);
  EXPECT_EQ(inner(v(0, 0, 1, 0, 2), v(0, 0, 1, 0, 2)), -1);
  EXPECT_EQ(inner(v(1, 0, 0, 1, 1), v(1, 0, 0, 1, 1)), 0);
}

TEST(Inner, MismatchedSignatureIsUsageError) {
  EXPECT_THROW(inner(v(1, 0, 0, 0, 1), v(1, 0, 0, 0, 2)), UsageError);
}

TEST(Inner, BilinearAndSymmetric) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> k(-3, 3);
  for (int t : {0, 1, 2}) {
    for (int i = 0; i < 100; ++i) {
      const auto a = random_vector(rng, t), b = random_vector(rng, t), c = random_vector(rng, t);
      const double al = k(rng);
      EXPECT_NEAR(inner(a, b), inner(b, a), 1e-12);
      EXPECT_NEAR(inner(al * a + c, b), al * inner(a, b) + inner(c, b), 1e-12 * (1 + std::abs(al)) * 10);
      const Bivector B1 = wedge(a, b), B2 = wedge(c, a), B3 = wedge(b, c);
      EXPECT_NEAR(bivector_inner(B1, B2), bivector_inner(B2, B1), 1e-12 * 100);
      EXPECT_NEAR(bivector_inner(al * B1 + B3, B2),
                  al * bivector_inner(B1, B2) + bivector_inner(B3, B2), 1e-10);
    }
  }
}

TEST(Causal, Examples) {
  EXPECT_EQ(causal_character(v(1, 0, 0, 0, 1)), CausalCharacter::Spacelike);
  EXPECT_EQ(causal_character(v(0, 0, 0, 2, 1)), CausalCharacter::Timelike);
  EXPECT_EQ(causal_character(v(1, 0, 0, 1, 1)), CausalCharacter::Lightlike);
  EXPECT_EQ(causal_character(v(0, 0, 0, 0, 1)), CausalCharacter::Spacelike);
}

TEST(Wedge, Examples) {
  const Bivector b = wedge(PseudoVector::basis(2, 1), PseudoVector::basis(3, 1));
  EXPECT_EQ(b.plucker, (std::array<double, 6>{0, 0, 0, 0, 0, 1}));
  const auto u = v(0.3, -2, 5, 1, 1);
  EXPECT_EQ(wedge(u, u).aux_norm(), 0);
  const Bivector c = wedge(v(1, 1, 0, 0, 1), v(0, 0, 1, 0, 1));
  EXPECT_EQ(c.plucker, (std::array<double, 6>{0, 1, 0, 1, 0, 0}));
}

TEST(BivectorInner, Examples) {
  EXPECT_EQ(bivector_inner(Bivector::basis(2, 3, 1), Bivector::basis(2, 3, 1)), -1);
  EXPECT_EQ(bivector_inner(Bivector::basis(0, 1, 2), Bivector::basis(0, 1, 2)), 1);
  EXPECT_EQ(bivector_inner(Bivector::basis(0, 1, 1), Bivector::basis(2, 3, 1)), 0);
}

TEST(BivectorInner, DeterminantIdentity) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const int t = k % 3;
    const auto a = random_vector(rng, t), b = random_vector(rng, t), c = random_vector(rng, t),
               d = random_vector(rng, t);
    const double lhs = bivector_inner(wedge(a, b), wedge(c, d));
    const double rhs = inner(a, c) * inner(b, d) - inner(a, d) * inner(b, c);
    const double scale = a.aux_norm() * b.aux_norm() * c.aux_norm() * d.aux_norm();
    ASSERT_LE(std::abs(lhs - rhs), 1e-10 * std::max({std::abs(rhs), scale * 1e-3, 1e-12}))
        << "quadruple " << k;
  }
}

TEST(Hodge, BasisExampleAndInvolution) {
  EXPECT_EQ(hodge_complement(Bivector::basis(0, 1, 1)).plucker, Bivector::basis(2, 3, 1).plucker);
  for (int t : {0, 1, 2}) {
    for (int k = 0; k < 6; ++k) {
      const Bivector b = Bivector::basis(kPairs[k].first, kPairs[k].second, t);
      const Bivector back = hodge_complement(hodge_complement(b));
      for (int i = 0; i < 6; ++i) EXPECT_EQ(back[i], b[i]) << "t=" << t << " pair " << k;
      // The raw star squares to (-1)^t.
      const Bivector twice = hodge_star(hodge_star(b));
      for (int i = 0; i < 6; ++i) EXPECT_EQ(twice[i], (t == 1 ? -1 : 1) * b[i]);
    }
  }
}

TEST(Hodge, NullBivectorIsDegenerate) {
  const Bivector null = wedge(v(1, 0, 0, 1, 1), v(0, 1, 0, 0, 1));
  EXPECT_THROW(hodge_complement(null), DegenerateError);
}

TEST(Hodge, DeSitterFrameAtOrigin) {
  const SurfaceFamily f = make_family(DeSitterMinimalSpec{1, 1, 1});
  const MovingFrame fr = closed_form_frame(f, 0, 0);
  const Bivector star = hodge_complement(wedge(fr.e[0], fr.e[1]), f.orientation);
  const Bivector e34 = wedge(fr.e[2], fr.e[3]);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(star[i], e34[i], 1e-15);
}

TEST(Hodge, ComplementIsOrthogonalToTangentWedges) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const int t = k % 3;
    const auto a = random_vector(rng, t), b = random_vector(rng, t);
    const Bivector B = wedge(a, b);
    if (std::abs(bivector_inner(B, B)) < 1e-3) continue;
    const Bivector S = hodge_complement(B);
    for (const auto& x : {a, b})
      for (int e = 0; e < 4; ++e)
        EXPECT_NEAR(bivector_inner(S, wedge(x, PseudoVector::basis(e, t))), 0, 1e-10);
  }
}

TEST(GramSchmidt, HandExample) {
  const auto p = gram_schmidt_indefinite(v(0, 0, 0, 2, 1), v(1, 0, 0, 1, 1));
  EXPECT_EQ(p.e1.coords, (std::array<double, 4>{0, 0, 0, 1}));
  EXPECT_EQ(p.eps1, -1);
  EXPECT_EQ(p.e2.coords, (std::array<double, 4>{1, 0, 0, 0}));
  EXPECT_EQ(p.eps2, 1);
}

TEST(GramSchmidt, OrthonormalInputUnchangedAndDegenerateRejected) {
  const auto p = gram_schmidt_indefinite(v(1, 0, 0, 0, 2), v(0, 0, 1, 0, 2));
  EXPECT_EQ(p.e1.coords, (std::array<double, 4>{1, 0, 0, 0}));
  EXPECT_EQ(p.e2.coords, (std::array<double, 4>{0, 0, 1, 0}));
  EXPECT_EQ(p.eps2, -1);
  EXPECT_THROW(gram_schmidt_indefinite(v(1, 2, 0, 0, 1), v(1, 2, 0, 0, 1)), DegenerateError);
  EXPECT_THROW(gram_schmidt_indefinite(v(1, 0, 0, 1, 1), v(0, 1, 0, 0, 1)), DegenerateError);
}

TEST(GramSchmidt, RandomPlanesAreOrthonormal) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const int t = k % 3;
    const auto a = random_vector(rng, t), b = random_vector(rng, t);
    const double g = inner(a, a) * inner(b, b) - inner(a, b) * inner(a, b);
    if (std::abs(g) < 1e-2) continue;
    const auto p = gram_schmidt_indefinite(a, b);
    EXPECT_NEAR(inner(p.e1, p.e1), p.eps1, 1e-10);
    EXPECT_NEAR(inner(p.e2, p.e2), p.eps2, 1e-10);
    EXPECT_NEAR(inner(p.e1, p.e2), 0, 1e-10);
    EXPECT_NEAR(wedge(p.e1, a).aux_norm(), 0, 1e-10 * a.aux_norm());
  }
}

TEST(Quadric, Examples) {
  const PseudoVector o({0, 0, 0, 0}, 1);
  const SurfaceFamily f = make_family(DeSitterMinimalSpec{1, 1, 1});
  for (double s : {-1.0, 0.0, 0.7})
    for (double t : {-2.0, 0.3}) {
      const PseudoVector F = f.immersion_jet(s, t, 0).r();
      EXPECT_NEAR(quadric_membership(F, o, 1, QuadricKind::Sphere), 0, 1e-12);
    }
  EXPECT_EQ(quadric_membership(o, o, 1, QuadricKind::Sphere), -1);
  EXPECT_EQ(quadric_membership(v(0, 0, 0, 1, 1), o, -1, QuadricKind::Hyperbolic), 0);
  EXPECT_THROW(quadric_membership(o, o, 0, QuadricKind::Sphere), UsageError);
}
