#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ftvs/fuzzy_real.hpp"

using namespace ftvs;

namespace {

using Violation = FuzzyRealValidation::Violation;

// Triangular fuzzy real (a, b, c) cut at the given levels.
FuzzyReal triangle(double a, double b, double c, std::vector<double> levels = default_alpha_levels()) {
  std::vector<Interval> cuts;
  for (double alpha : levels) cuts.push_back({a + alpha * (b - a), c - alpha * (c - b)});
  return FuzzyReal(levels, cuts, b);
}

void expect_same_cuts(const FuzzyReal& a, const FuzzyReal& b) {
  ASSERT_EQ(a.levels(), b.levels());
  for (std::size_t k = 0; k < a.cuts().size(); ++k) {
    EXPECT_EQ(a.cuts()[k].lo, b.cuts()[k].lo) << "level " << a.levels()[k];
    EXPECT_EQ(a.cuts()[k].hi, b.cuts()[k].hi) << "level " << a.levels()[k];
  }
  EXPECT_EQ(a.normal_point(), b.normal_point());
}

FelbinNorm corrupted_at_zero() {
  return crisp_felbin_norm("abs_plus_one_at_zero", 1, [](std::span<const double> x) {
    return x[0] == 0.0 ? 1.0 : std::abs(x[0]);
  });
}

}  // namespace

TEST(Validate, CrispThreeIsValid) { EXPECT_TRUE(validate_fuzzy_real(FuzzyReal::crisp(3.0)).ok()); }

TEST(Validate, LargerCutAtHigherLevelBreaksNesting) {
  const FuzzyReal eta({0.5, 0.9, 1.0}, {{0.0, 1.0}, {-1.0, 2.0}, {0.5, 0.5}}, 0.5);
  const auto v = validate_fuzzy_real(eta);
  EXPECT_EQ(v.violation, Violation::Nesting);
  EXPECT_EQ(v.alpha_first, 0.5);
  EXPECT_EQ(v.alpha_second, 0.9);
}

TEST(Validate, InvertedCutIsN2) {
  const FuzzyReal eta({0.5, 1.0}, {{2.0, 1.0}, {1.5, 1.5}}, 1.5);
  EXPECT_EQ(validate_fuzzy_real(eta).violation, Violation::N2);
}

TEST(Validate, NormalPointOutsideTopCutIsN1) {
  const FuzzyReal eta({0.5, 1.0}, {{0.0, 2.0}, {1.0, 1.0}}, 1.5);
  EXPECT_EQ(validate_fuzzy_real(eta).violation, Violation::N1);
}

TEST(Validate, NegativeLowerEndpointFlaggedOnlyWhenAsked) {
  const FuzzyReal eta = triangle(-1.0, 0.0, 1.0);
  EXPECT_TRUE(validate_fuzzy_real(eta).ok());
  EXPECT_EQ(validate_fuzzy_real(eta, true).violation, Violation::Negative);
}

TEST(ScalarScale, Examples) {
  const FuzzyReal eta = triangle(1.0, 2.0, 4.0);
  expect_same_cuts(scalar_scale(1.0, eta), eta);
  EXPECT_TRUE(scalar_scale(0.0, eta).is_crisp_zero());
  EXPECT_TRUE(scalar_scale(-2.0, FuzzyReal::crisp(3.0)).is_crisp(6.0));
}

TEST(EuclideanNorm, Examples) {
  const FelbinNorm norm = euclidean_felbin_norm(2);
  const FuzzyReal n34 = norm({3.0, 4.0});
  EXPECT_TRUE(n34.is_crisp(5.0));
  for (double alpha : n34.levels()) EXPECT_EQ(norm.upper(std::vector<double>{3.0, 4.0}, alpha), 5.0);
  EXPECT_TRUE(norm({0.0, 0.0}).is_crisp_zero());
  EXPECT_TRUE(norm({-3.0, 0.0}).is_crisp(3.0));
  EXPECT_TRUE(norm.crisp());
}

TEST(StarNorm, Examples) {
  const FelbinNorm star = star_norm_on_K();
  const std::vector<double> two{2.0};
  EXPECT_EQ(star.membership(two, 1.0), 0.5);
  const FuzzyReal n2 = star({2.0});
  EXPECT_EQ(n2.cut(0.5), (Interval{0.0, 1.0}));
  EXPECT_TRUE(star({0.0}).is_crisp_zero());
  EXPECT_FALSE(star.crisp());
}

TEST(FelbinAxioms, EuclideanPasses) {
  const FelbinNorm norm = euclidean_felbin_norm(2);
  const std::vector<Point> xs{{1.0, 0.0}, {0.0, 2.0}, {3.0, 4.0}, {-1.5, 0.5}, {0.25, -0.75}};
  const std::vector<double> offsets{0.0, 0.5, 1.0, 2.0};
  const CheckReport r = felbin_axioms_check(norm, xs, offsets);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.note;
  EXPECT_EQ(r.max_violation, 0.0);
}

TEST(FelbinAxioms, StarNormPasses) {
  const std::vector<Point> xs{{1.0}, {-1.0}, {2.0}, {-2.0}};
  const std::vector<double> offsets{0.0, 0.5, 1.0, 2.0};
  const CheckReport r = felbin_axioms_check(star_norm_on_K(), xs, offsets);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.note;
  EXPECT_LE(r.max_violation, kAxiomTolerance);
}

TEST(FelbinAxioms, CorruptedZeroFlagsF1) {
  const std::vector<Point> xs{{1.0}, {-2.0}};
  const std::vector<double> offsets{0.0, 1.0};
  const CheckReport r = felbin_axioms_check(corrupted_at_zero(), xs, offsets);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_NE(r.note.find("F1"), std::string::npos) << r.note;
  EXPECT_GE(r.max_violation, 1.0);
}

TEST(Properties, CatalogNormsYieldValidNonNegativeReals) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  const FelbinNorm e3 = euclidean_felbin_norm(3);
  const FelbinNorm star = star_norm_on_K();
  for (int trial = 0; trial < 200; ++trial) {
    EXPECT_TRUE(validate_fuzzy_real(e3({coord(rng), coord(rng), coord(rng)}), true).ok());
    EXPECT_TRUE(validate_fuzzy_real(star({coord(rng)}), true).ok());
  }
}

TEST(Properties, CutEndpointsAreMonotoneInLevel) {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  const FelbinNorm star = star_norm_on_K();
  for (int trial = 0; trial < 100; ++trial) {
    const FuzzyReal eta = star({coord(rng)});
    for (std::size_t k = 1; k < eta.cuts().size(); ++k) {
      EXPECT_LE(eta.cuts()[k].hi, eta.cuts()[k - 1].hi);
      EXPECT_GE(eta.cuts()[k].lo, eta.cuts()[k - 1].lo);
    }
  }
}

TEST(Properties, ScalarScaleComposesExactly) {
  // Powers of two keep every product exact, so cut-wise equality is exact.
  const double factors[] = {-4.0, -1.0, -0.5, 0.0, 0.25, 1.0, 2.0, 8.0};
  const FuzzyReal eta = triangle(0.5, 1.25, 3.0);
  for (double r : factors) {
    for (double s : factors) {
      expect_same_cuts(scalar_scale(r * s, eta), scalar_scale(r, scalar_scale(s, eta)));
    }
  }
}

TEST(Properties, EuclideanUpperEndpointIgnoresLevel) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  const FelbinNorm norm = euclidean_felbin_norm(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> x{coord(rng), coord(rng)};
    const double top = norm.upper(x, 1.0);
    for (double alpha : default_alpha_levels()) EXPECT_EQ(norm.upper(x, alpha), top);
    EXPECT_DOUBLE_EQ(top, std::hypot(x[0], x[1]));
  }
}
