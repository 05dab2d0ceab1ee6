#include <gtest/gtest.h>

#include <limits>

#include "oracles.hpp"
#include "rigidity/bounds.hpp"

using namespace rigidity;

TEST(CurveClass, CheckedRejectsOutOfRange) {
  EXPECT_THROW(CurveClass::checked(0, 1, 3), precondition_error);
  EXPECT_THROW(CurveClass::checked(5, -1, 3), precondition_error);
  EXPECT_THROW(CurveClass::checked(5, 1, 2), precondition_error);
  EXPECT_EQ(CurveClass::checked(5, 1, 3), (CurveClass{5, 1, 3}));
}

TEST(BrillNoether, Examples) {
  EXPECT_EQ(brill_noether({9, 8, 3}), 0);
  EXPECT_EQ(brill_noether({10, 6, 5}), 0);
  EXPECT_EQ(brill_noether({14, 9, 3}), 17);
}

TEST(BrillNoether, CanonicalSeriesIsZero) {
  for (integer g = 4; g <= 200; ++g) EXPECT_EQ(brill_noether({2 * g - 2, g, g - 1}), 0) << g;
}

TEST(BrillNoether, NonnegativeInNonspecialRange) {
  for (integer r = 3; r <= 12; ++r)
    for (integer g = 0; g <= 80; ++g)
      for (integer d = g + r; d <= g + r + 40; ++d)
        EXPECT_GE(brill_noether({d, g, r}), 0) << d << "," << g << "," << r;
}

TEST(BrillNoether, ImageDimensionFormsAgree) {
  for (integer d = 1; d <= 200; ++d)
    for (integer g = 0; g <= 200; ++g)
      ASSERT_EQ(3 * g - 3 + brill_noether({d, g, 3}), 4 * d - 15) << d << "," << g;
}

TEST(BrillNoether, OverflowIsReported) {
  const integer big = std::numeric_limits<integer>::max();
  EXPECT_THROW(brill_noether({1, big, big}), std::overflow_error);
}

TEST(EulerNormal, Examples) {
  EXPECT_EQ(euler_normal({7, 6, 3}), 28);
  EXPECT_EQ(euler_normal({9, 9, 3}), 36);
  EXPECT_EQ(euler_normal({1, 0, 3}), 4);
  EXPECT_EQ(euler_normal({30, 34, 9}), 10 * 30 - 6 * 33);
}

TEST(EulerNormal, SpaceCurvesGiveFourD) {
  for (integer d = 1; d <= 100; ++d)
    for (integer g = 0; g <= 100; ++g) EXPECT_EQ(euler_normal({d, g, 3}), 4 * d);
}

TEST(MaxGenusPi, Examples) {
  EXPECT_EQ(max_genus_pi(9, 3), 12);
  EXPECT_EQ(max_genus_pi(6, 3), 4);
  EXPECT_EQ(max_genus_pi(7, 3), 6);
  EXPECT_EQ(max_genus_pi(8, 3), 9);
  EXPECT_EQ(max_genus_pi(10, 9), 1);
}

TEST(MaxGenusPi, EllipticNormalCurves) {
  for (integer r = 2; r <= 60; ++r) EXPECT_EQ(max_genus_pi(r + 1, r), 1) << r;
}

TEST(MaxGenusPi, MatchesSumOracle) {
  for (integer r = 2; r <= 30; ++r)
    for (integer d = r; d <= 300; ++d) ASSERT_EQ(max_genus_pi(d, r), oracle::pi(d, r)) << d << "," << r;
}

TEST(MaxGenusPi, RejectsBadInput) {
  EXPECT_THROW(max_genus_pi(2, 3), precondition_error);
  EXPECT_THROW(max_genus_pi(5, 1), precondition_error);
}

TEST(CastelnuovoProfile, Examples) {
  const auto p93 = castelnuovo_profile(9, 3);
  EXPECT_EQ(p93.m1, 2);
  EXPECT_EQ(p93.eps1, 2);
  EXPECT_EQ(p93.mu1, 1);
  EXPECT_EQ(p93.pi1, 10);

  const auto p83 = castelnuovo_profile(8, 3);
  EXPECT_EQ(p83.m1, 2);
  EXPECT_EQ(p83.eps1, 1);
  EXPECT_EQ(p83.mu1, 0);
  EXPECT_EQ(p83.pi1, 7);

  const auto p = castelnuovo_profile(30, 9);
  EXPECT_EQ(p, (CastelnuovoProfile{9, 3, 2, 0, 36, 2, 9, 2, 34}));
}

TEST(CastelnuovoProfile, RejectsBadInput) {
  EXPECT_THROW(castelnuovo_profile(10, 2), precondition_error);
  EXPECT_THROW(castelnuovo_profile(6, 5), precondition_error);
  EXPECT_NO_THROW(castelnuovo_profile(7, 5));
}

TEST(CastelnuovoProfile, InvariantsAndOracle) {
  for (integer alpha = 3; alpha <= 40; ++alpha) {
    for (integer d = alpha + 2; d <= 500; ++d) {
      const auto p = castelnuovo_profile(d, alpha);
      const auto o = oracle::profile(d, alpha);
      ASSERT_EQ(d - 1, p.m1 * alpha + p.eps1);
      ASSERT_EQ(d - 1, p.m2 * (alpha + 1) + p.eps2);
      ASSERT_TRUE(p.eps1 >= 0 && p.eps1 <= alpha - 1);
      ASSERT_TRUE(p.eps2 >= 0 && p.eps2 <= alpha);
      ASSERT_GE(p.m2, 1);
      ASSERT_EQ(p.mu1, p.eps1 == alpha - 1 ? 1 : 0);
      if (p.eps2 == alpha)
        ASSERT_EQ(p.mu2, 2);
      else if (p.eps2 >= alpha - 2)
        ASSERT_EQ(p.mu2, 1);
      else
        ASSERT_EQ(p.mu2, 0);
      ASSERT_EQ(p.m1, o.m1);
      ASSERT_EQ(p.mu2, o.mu2);
      ASSERT_EQ(p.pi1, o.pi1) << d << "," << alpha;
      ASSERT_EQ(p.pi2, o.pi2) << d << "," << alpha;
    }
  }
}

TEST(CastelnuovoProfile, BoundsAreOrdered) {
  for (integer alpha = 3; 2 * alpha + 3 <= 500; ++alpha) {
    for (integer d = 2 * alpha + 3; d <= 500; ++d) {
      const auto p = castelnuovo_profile(d, alpha);
      ASSERT_GE(max_genus_pi(d, alpha), p.pi1) << d << "," << alpha;
      ASSERT_GE(p.pi1, p.pi2) << d << "," << alpha;
    }
  }
}

TEST(AghCap, Examples) {
  EXPECT_EQ(agh_cap(9, 12, 3), 1);
  EXPECT_EQ(agh_cap(12, 12, 3), 4);
  // 2*8 - 9 - 7 + 1.
  EXPECT_EQ(agh_cap(8, 7, 3), 1);
}

TEST(AghCap, BranchesAgreeAtDEqualsG) {
  for (integer g = 1; g <= 100; ++g)
    for (integer s = 1; s <= 20; ++s) EXPECT_EQ(g - 3 * s + 1, 2 * g - 3 * s - g + 1) << g;
  for (integer g = 1; g <= 100; ++g)
    for (integer s = 1; s <= 20; ++s) EXPECT_EQ(agh_cap(g, g, s), g - 3 * s + 1);
}

TEST(AghCap, Monotone) {
  for (integer d = 1; d <= 80; ++d) {
    for (integer g = 0; g <= 120; ++g) {
      for (integer s = 1; s < 30; ++s) ASSERT_GE(agh_cap(d, g, s), agh_cap(d, g, s + 1));
      if (d < g + 1) continue;
      for (integer s = 1; s < 10; ++s) ASSERT_GE(agh_cap(d, g, s), agh_cap(d, g + 1, s));
    }
  }
}

TEST(EmbedDimCap, Examples) {
  EXPECT_EQ(embed_dim_cap(9, 12), 3);
  EXPECT_EQ(embed_dim_cap(28, 100), 9);
  EXPECT_EQ(embed_dim_cap(9, 8), 3);
}

TEST(QuadricTypes, Examples) {
  EXPECT_TRUE(quadric_types(9, 11).empty());
  EXPECT_EQ(quadric_types(9, 12), (std::vector<QuadricType>{{5, 4}}));
  EXPECT_EQ(quadric_types(5, 0), (std::vector<QuadricType>{{4, 1}}));
  EXPECT_EQ(quadric_types(8, 8), (std::vector<QuadricType>{{5, 3}}));
  EXPECT_EQ(quadric_types(8, 9), (std::vector<QuadricType>{{4, 4}}));
  EXPECT_EQ(quadric_types(9, 10), (std::vector<QuadricType>{{6, 3}}));
  EXPECT_TRUE(quadric_types(8, 7).empty());
}

TEST(QuadricTypes, GenusZeroFamily) {
  for (integer d = 2; d <= 100; ++d)
    EXPECT_EQ(quadric_types(d, 0), (std::vector<QuadricType>{{d - 1, 1}})) << d;
}

TEST(QuadricTypes, MatchesBruteForce) {
  for (integer d = 1; d <= 120; ++d) {
    for (integer g = 0; g <= 400; ++g) {
      const auto got = quadric_types(d, g);
      const auto want = oracle::quadrics(d, g);
      ASSERT_EQ(got.size(), want.size()) << d << "," << g;
      for (std::size_t k = 0; k < got.size(); ++k) {
        ASSERT_EQ(got[k].a, want[k].first);
        ASSERT_EQ(got[k].b, want[k].second);
        ASSERT_EQ(got[k].a + got[k].b, d);
        ASSERT_EQ((got[k].a - 1) * (got[k].b - 1), g);
        if (d >= 3) {
          ASSERT_LE(g, max_genus_pi(d, 3));
        }
      }
    }
  }
}

TEST(ImageDimR3, Examples) {
  EXPECT_EQ(image_dim_r3(8, 0), 17);
  EXPECT_EQ(image_dim_r3(8, 1), 18);
  EXPECT_EQ(image_dim_r3(9, 0), 21);
  EXPECT_EQ(image_dim_r3(9, 2), 23);
  EXPECT_THROW(image_dim_r3(9, -1), precondition_error);
}

TEST(GonalityLocusDim, Examples) {
  EXPECT_EQ(gonality_locus_dim(6, 3), 13);
  EXPECT_EQ(gonality_locus_dim(7, 4), 17);
  for (integer g = 2; g <= 50; ++g) EXPECT_EQ(gonality_locus_dim(g, 2), 2 * g - 1);
}

TEST(GonalityLocusDim, RejectsBadInput) {
  EXPECT_THROW(gonality_locus_dim(6, 5), precondition_error);
  EXPECT_THROW(gonality_locus_dim(1, 2), precondition_error);
  EXPECT_THROW(gonality_locus_dim(6, 1), precondition_error);
}

TEST(BundleDims, Examples) {
  EXPECT_EQ(bundle_dims(3, 3), (BundleDims{0, 15}));
  EXPECT_EQ(bundle_dims(3, 5), (BundleDims{8, 15}));
  for (integer r = 3; r <= 30; ++r) EXPECT_EQ(bundle_dims(r, r), (BundleDims{0, r * r + 2 * r}));
  for (integer alpha = 3; alpha <= 30; ++alpha)
    EXPECT_EQ(bundle_dims(3, alpha).grassmann + bundle_dims(3, alpha).pgl + 22, 4 * alpha + 25);
  EXPECT_THROW(bundle_dims(4, 3), precondition_error);
}
