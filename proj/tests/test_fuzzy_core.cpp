#include <gtest/gtest.h>

#include <random>

#include "ftvs/algebra.hpp"
#include "oracles.hpp"

using namespace ftvs;

namespace {

Domain line41() { return Domain::cube(1, -5.0, 5.0, oracle::kPoints); }

FuzzySet closed_interval(const Domain& d, double lo, double hi) { return indicator(d, Predicate::box({lo}, {hi}, false)); }

std::vector<double> random_values(std::mt19937& rng, std::size_t n, double zero_fraction = 0.3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) {
    const double r = u(rng);
    // Quarter steps keep min/max comparisons free of rounding noise.
    x = r < zero_fraction ? 0.0 : std::round(u(rng) * 4.0) / 4.0;
  }
  return v;
}

}  // namespace

TEST(Eval, SpecExamples) {
  const Domain plane = Domain::cube(2, -2.0, 2.0, 41);
  EXPECT_EQ(constant(plane, 0.5).eval({1.3, -0.7}), 0.5);
  EXPECT_EQ(indicator(plane, Predicate::ball({0.0, 0.0}, 1.0, true)).eval({0.5, 0.0}), 1.0);
  EXPECT_EQ(triangular(line41(), 0.0, 1.0, 2.0).eval({0.5}), 0.5);
}

TEST(Eval, OutsideBoundedBoxIsZero) {
  const Domain plane = Domain::cube(2, -2.0, 2.0, 41);
  EXPECT_EQ(constant(plane, 0.5).eval({3.0, 0.0}), 0.0);
  const Domain open_plane = Domain::cube(2, -2.0, 2.0, 41, false);
  EXPECT_EQ(constant(open_plane, 0.5).eval({3.0, 0.0}), 0.5);
}

TEST(Eval, GridUsesNearestLatticePoint) {
  const Domain d = Domain::cube(1, 0.0, 1.0, 5);
  const FuzzySet g = grid_sample(d, {0.0, 0.25, 0.5, 0.75, 1.0});
  EXPECT_EQ(g.eval({0.26}), 0.25);
  EXPECT_EQ(g.eval({0.74}), 0.75);
  EXPECT_EQ(g.eval({1.0}), 1.0);
}

TEST(Eval, GridRejectsWrongLength) {
  EXPECT_THROW(grid_sample(Domain::cube(1, 0.0, 1.0, 5), {0.0, 1.0}), ArgumentError);
}

TEST(Image, IdentityOnMatchingGrids) {
  const Domain d = line41();
  const FuzzySet mu = triangular(d, -1.0, 0.5, 3.0);
  const FuzzySet img = image(AffineMap::identity(1), mu, d);
  EXPECT_EQ(img.sample(), mu.sample());
}

TEST(Image, ProjectionOfOpenBallIsOpenInterval) {
  const Domain plane = Domain::cube(2, -2.0, 2.0, 41);
  const Domain line = Domain::cube(1, -2.0, 2.0, 41);
  const FuzzySet ball = indicator(plane, Predicate::ball({0.0, 0.0}, 1.0, true));
  const FuzzySet img = image(AffineMap::projection(2, 0, 1), ball, line);
  // Oracle: exhaustive sweep over the source lattice for a point projecting
  // onto each target coordinate.
  for (std::size_t k = 0; k < line.size(); ++k) {
    const double t = line.coordinate(0, k);
    double expected = 0.0;
    for (std::size_t j = 0; j < 41; ++j) {
      const double s = plane.coordinate(1, j);
      if (t * t + s * s < 1.0) expected = 1.0;
    }
    EXPECT_EQ(img.eval({t}), expected) << "t=" << t;
    EXPECT_EQ(expected, std::abs(t) < 1.0 ? 1.0 : 0.0);
  }
}

TEST(Image, EmptySupportGivesZero) {
  const Domain d = line41();
  EXPECT_EQ(height(image(AffineMap::identity(1), zero_set(d), d)), 0.0);
}

TEST(Image, MatchesIntegerOracle) {
  std::mt19937 rng(7);
  const Domain d = line41();
  for (int slope : {-2, -1, 1, 2, 3}) {
    for (int shift : {-6, 0, 3}) {
      const auto v = random_values(rng, d.size());
      const FuzzySet img = image(AffineMap(1, 1, {double(slope)}, {shift * 0.25}), grid_sample(d, v), d);
      EXPECT_EQ(img.sample(), oracle::image_integer_affine(v, slope, shift)) << slope << " " << shift;
    }
  }
}

TEST(Image, DimensionMismatchThrows) {
  EXPECT_THROW(image(AffineMap::identity(2), constant(line41(), 1.0), line41()), ArgumentError);
}

TEST(Preimage, SpecExamples) {
  const Domain d = line41();
  const FuzzySet eta = triangular(d, -2.0, 0.0, 1.0);
  const FuzzySet same = preimage(AffineMap::identity(1), eta, d);
  EXPECT_EQ(same.sample(), eta.sample());

  const Domain plane = Domain::cube(2, -2.0, 2.0, 41);
  const FuzzySet window = indicator(d, Predicate::box({-1.0}, {1.0}, true));
  const FuzzySet sum_pull = preimage(AffineMap::functional(std::vector<double>{1.0, 1.0}), window, plane);
  EXPECT_EQ(sum_pull.eval({0.3, 0.3}), 1.0);
  EXPECT_EQ(sum_pull.eval({0.6, 0.6}), 0.0);

  const FuzzySet c = preimage(AffineMap::functional(std::vector<double>{1.0, -1.0}), constant(d, 0.4), plane);
  for (std::size_t i = 0; i < plane.size(); i += 37) EXPECT_EQ(c(plane.point(i)), 0.4);
}

TEST(Preimage, DimensionMismatchThrows) {
  const Domain plane = Domain::cube(2, -2.0, 2.0, 5);
  EXPECT_THROW(preimage(AffineMap::identity(2), constant(line41(), 1.0), plane), ArgumentError);
}

TEST(Add, DisjointClosedIntervals) {
  const Domain d = line41();
  const FuzzySet a = closed_interval(d, 0.0, 1.0);
  const FuzzySet b = closed_interval(d, 2.0, 3.0);
  const FuzzySet sum = add(a, b);
  const auto expected = oracle::sup_min_sum(a.sample(), b.sample());
  EXPECT_EQ(sum.sample(), expected);
  for (int i = 0; i < oracle::kPoints; ++i) {
    const double x = oracle::coord(i);
    EXPECT_EQ(sum.eval({x}), x >= 2.0 && x <= 4.0 ? 1.0 : 0.0) << x;
  }
}

TEST(Add, SingletonIsIdentity) {
  const Domain d = line41();
  const FuzzySet mu = triangular(d, -2.0, 0.5, 1.5);
  const FuzzySet one = singleton(d);
  EXPECT_EQ(add(mu, one).sample(), mu.sample());
  EXPECT_EQ(add(one, mu).sample(), mu.sample());
}

TEST(Add, TriangularPeaksAdd) {
  const Domain d = line41();
  const FuzzySet t = triangular(d, 0.0, 1.0, 2.0);
  const FuzzySet s = add(t, t);
  EXPECT_EQ(s.eval({2.0}), 1.0);
  EXPECT_EQ(s.sample(), oracle::sup_min_sum(t.sample(), t.sample()));
}

TEST(Add, ZeroOperandGivesZero) {
  const Domain d = line41();
  EXPECT_EQ(height(add(zero_set(d), constant(d, 1.0))), 0.0);
}

TEST(Add, DomainMismatchThrows) {
  EXPECT_THROW(add(constant(line41(), 1.0), constant(Domain::cube(1, -5.0, 5.0, 21), 1.0)), ArgumentError);
}

TEST(IntervalSum, ClosedFormAgreesWithLatticeSum) {
  const Domain d = line41();
  const FuzzySet a = closed_interval(d, -1.0, 0.5);
  const FuzzySet b = closed_interval(d, 0.25, 1.0);
  EXPECT_EQ(interval_sum(a, b).sample(), add(a, b).sample());
}

TEST(ScalarMul, SpecExamples) {
  const Domain d = line41();
  const FuzzySet mu = triangular(d, -1.0, 0.0, 2.0);
  EXPECT_EQ(scalar_mul(1.0, mu).sample(), mu.sample());

  const FuzzySet unit = indicator(d, Predicate::box({-1.0}, {1.0}, true));
  const FuzzySet twice = scalar_mul(2.0, unit);
  const FuzzySet wide = indicator(d, Predicate::box({-2.0}, {2.0}, true));
  EXPECT_EQ(twice.sample(), wide.sample());

  const FuzzySet zero = scalar_mul(0.0, mu);
  EXPECT_EQ(zero.eval({0.0}), 1.0);
  for (int i = 0; i < oracle::kPoints; ++i) {
    if (i != oracle::kCenter) EXPECT_EQ(zero.eval({oracle::coord(i)}), 0.0);
  }
}

TEST(ScalarMul, ZeroCarriesLatticeHeight) {
  const Domain d = line41();
  const FuzzySet capped = meet(triangular(d, 1.0, 2.0, 3.0), constant(d, 0.75));
  EXPECT_EQ(scalar_mul(0.0, capped).eval({0.0}), 0.75);
}

TEST(Product, SpecExamples) {
  const Domain d = line41();
  EXPECT_EQ(height(product(constant(d, 1.0), constant(d, 1.0))), 1.0);
  const FuzzySet prod1 = product(constant(d, 1.0), constant(d, 1.0));
  for (std::size_t i = 0; i < prod1.domain().size(); i += 97) EXPECT_EQ(prod1(prod1.domain().point(i)), 1.0);

  const FuzzySet u = indicator(d, Predicate::box({-1.0}, {1.0}, true));
  EXPECT_EQ(product(u, u).eval({0.5, 2.0}), 0.0);
  const FuzzySet tp = product(triangular(d, 0.0, 1.0, 2.0), constant(d, 0.3));
  for (double y : {-4.0, 0.0, 3.25}) EXPECT_EQ(tp.eval({1.0, y}), 0.3);
}

TEST(Lattice, SpecExamples) {
  const Domain d = line41();
  const FuzzySet mu = triangular(d, -3.0, 0.0, 1.0);
  EXPECT_EQ(meet(mu, constant(d, 1.0)).sample(), mu.sample());
  EXPECT_EQ(join(mu, constant(d, 0.0)).sample(), mu.sample());
  const FuzzySet neg = indicator(d, Predicate::halfspace({1.0}, 0.0, true));
  const FuzzySet pos = indicator(d, Predicate::halfspace({-1.0}, 0.0, true));
  EXPECT_EQ(height(meet(neg, pos)), 0.0);
  EXPECT_THROW(meet(std::span<const FuzzySet>{}), ArgumentError);
  EXPECT_THROW(join(std::span<const FuzzySet>{}), ArgumentError);
}

TEST(AlphaCut, SpecExamples) {
  const Domain d = line41();
  EXPECT_EQ(alpha_cut(constant(d, 0.5), 0.5).count(), d.size());
  EXPECT_TRUE(alpha_cut(constant(d, 0.5), 0.6).empty());
  const AlphaCut cut = alpha_cut(triangular(d, 0.0, 1.0, 2.0), 0.5);
  for (int i = 0; i < oracle::kPoints; ++i) {
    const double x = oracle::coord(i);
    EXPECT_EQ(cut.contains(std::size_t(i)), x >= 0.5 && x <= 1.5) << x;
  }
  EXPECT_THROW(alpha_cut(constant(d, 0.5), 0.0), ArgumentError);
  EXPECT_THROW(alpha_cut(constant(d, 0.5), 1.5), ArgumentError);
}

TEST(Height, SpecExamples) {
  const Domain d = line41();
  EXPECT_EQ(height(constant(d, 0.35)), 0.35);
  EXPECT_EQ(height(triangular(d, 0.0, 1.0, 2.0)), 1.0);
  EXPECT_EQ(height(zero_set(d)), 0.0);
}

TEST(Translate, SpecExamples) {
  const Domain plane = Domain::cube(2, -3.0, 3.0, 25);
  const FuzzySet ball = indicator(plane, Predicate::ball({0.0, 0.0}, 1.0, true));
  EXPECT_EQ(translate(std::vector<double>{0.0, 0.0}, ball).sample(), ball.sample());
  EXPECT_EQ(translate(std::vector<double>{1.0, 0.0}, ball).eval({1.0, 0.0}), 1.0);
  const std::vector<double> v{0.5, -1.25};
  const std::vector<double> minus_v{-0.5, 1.25};
  EXPECT_EQ(translate(v, translate(minus_v, ball)).sample(), ball.sample());
  EXPECT_THROW(translate(std::vector<double>{1.0}, ball), ArgumentError);
}

// Properties over seeded random grids on the dyadic lattice.

TEST(Properties, AddIsCommutative) {
  std::mt19937 rng(11);
  const Domain d = line41();
  for (int trial = 0; trial < 20; ++trial) {
    const FuzzySet a = grid_sample(d, random_values(rng, d.size()));
    const FuzzySet b = grid_sample(d, random_values(rng, d.size()));
    EXPECT_EQ(add(a, b).sample(), add(b, a).sample());
    EXPECT_EQ(add(a, b).sample(), oracle::sup_min_sum(a.sample(), b.sample()));
  }
}

TEST(Properties, SingletonIsTwoSidedIdentity) {
  std::mt19937 rng(12);
  const Domain d = line41();
  const FuzzySet one = singleton(d);
  for (int trial = 0; trial < 10; ++trial) {
    const FuzzySet a = grid_sample(d, random_values(rng, d.size()));
    EXPECT_EQ(add(a, one).sample(), a.sample());
    EXPECT_EQ(add(one, a).sample(), a.sample());
  }
}

TEST(Properties, ScalarMulComposes) {
  const Domain d = line41();
  const FuzzySet mu = join(triangular(d, -2.0, -0.5, 1.0), indicator(d, Predicate::box({1.5}, {2.5}, true)));
  // Powers of two make x/t/s and x/(st) the same double. The inner factor
  // must not stretch the support past the box, where the lattice truncates it.
  const double outer[] = {-4.0, -1.0, -0.5, 0.25, 0.5, 1.0, 2.0};
  const double inner[] = {-1.0, -0.5, 0.25, 0.5, 1.0};
  for (double s : outer) {
    for (double t : inner) {
      EXPECT_EQ(scalar_mul(s, scalar_mul(t, mu)).sample(), scalar_mul(s * t, mu).sample()) << s << " " << t;
    }
  }
}

TEST(Properties, PreimageDistributesOverLattice) {
  std::mt19937 rng(13);
  const Domain d = line41();
  const Domain plane = Domain::cube(2, -2.0, 2.0, 17);
  const AffineMap f(1, 2, {1.0, -0.5}, {0.25});
  for (int trial = 0; trial < 10; ++trial) {
    const FuzzySet a = grid_sample(d, random_values(rng, d.size()));
    const FuzzySet b = grid_sample(d, random_values(rng, d.size()));
    EXPECT_EQ(preimage(f, meet(a, b), plane).sample(), meet(preimage(f, a, plane), preimage(f, b, plane)).sample());
    EXPECT_EQ(preimage(f, join(a, b), plane).sample(), join(preimage(f, a, plane), preimage(f, b, plane)).sample());
  }
}

TEST(Properties, ImageOfPreimageContracts) {
  std::mt19937 rng(14);
  const Domain d = line41();
  const AffineMap f(1, 1, {2.0}, {0.0});
  for (int trial = 0; trial < 10; ++trial) {
    const FuzzySet eta = grid_sample(d, random_values(rng, d.size()));
    const FuzzySet back = image(f, preimage(f, eta, d), d);
    const auto hit = oracle::image_integer_affine(std::vector<double>(d.size(), 1.0), 2, 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (hit[i] > 0.0) EXPECT_LE(back(d.point(i)), eta(d.point(i)));
    }
  }
}

TEST(Properties, AlphaCutsAreNested) {
  std::mt19937 rng(15);
  const Domain d = Domain::cube(2, -1.0, 1.0, 9);
  const double levels[] = {0.1, 0.25, 0.5, 0.75, 1.0};
  for (int trial = 0; trial < 10; ++trial) {
    const FuzzySet mu = grid_sample(d, random_values(rng, d.size(), 0.1));
    for (std::size_t i = 0; i + 1 < std::size(levels); ++i) {
      EXPECT_TRUE(alpha_cut(mu, levels[i + 1]).subset_of(alpha_cut(mu, levels[i])));
    }
  }
}

TEST(Properties, EvaluationsStayInUnitInterval) {
  std::mt19937 rng(16);
  const Domain d = line41();
  for (int trial = 0; trial < 10; ++trial) {
    const FuzzySet a = grid_sample(d, random_values(rng, d.size()));
    const FuzzySet b = triangular(d, -1.0, 0.0, 2.0);
    const FuzzySet trees[] = {add(a, b), scalar_mul(-1.5, a), translate(std::vector<double>{0.75}, b),
                              image(AffineMap(1, 1, {-1.0}, {1.0}), join(a, b), d), meet(a, scalar_mul(0.0, b))};
    for (const FuzzySet& t : trees) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double v = t(d.point(i));
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
    }
  }
}
