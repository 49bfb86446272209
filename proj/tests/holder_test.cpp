#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "mspace/corpus.hpp"
#include "mspace/holder.hpp"
#include "mspace/random.hpp"
#include "support.hpp"

namespace mspace {
namespace {

using testing::code_of;
using testing::line;

PointMap identity(std::size_t n) {
  PointMap f;
  for (std::size_t i = 0; i < n; ++i) f.image.push_back(i);
  return f;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

TEST(HolderConstant, ConstantMapIsZero) {
  const auto d = line({0, 1, 2, 5});
  const auto r = holder_constant(d, d, PointMap{{2, 2, 2, 2}}, 1.0);
  EXPECT_EQ(r.constant, 0.0);
  EXPECT_EQ(r.witness, (IndexPair{0, 1}));
}

TEST(HolderConstant, IdentityIntoSquareRoot) {
  Rng rng(41);
  const auto d = random_metric(rng, 9);
  const auto r = holder_constant(d, snowflake(d, 0.5).space, identity(9), 0.5);
  EXPECT_EQ(r.constant, 1.0);
}

TEST(HolderConstant, LinearScaling) {
  const auto r = holder_constant(line({0, 1, 2}), line({0, 2, 4}), identity(3), 1.0);
  EXPECT_EQ(r.constant, 2.0);
  EXPECT_EQ(r.witness, (IndexPair{0, 1}));
}

TEST(HolderConstant, Errors) {
  const auto d = line({0, 1});
  EXPECT_EQ(code_of([&] { holder_constant(d, d, identity(2), 0.0); }), Errc::NonPositiveExponent);
  EXPECT_EQ(code_of([&] { holder_constant(d, d, PointMap{{0, 2}}, 1.0); }), Errc::MapRangeError);
  EXPECT_EQ(code_of([&] { holder_constant(d, d, PointMap{{0}}, 1.0); }), Errc::MapRangeError);
}

TEST(DistanceToPoint, Examples) {
  EXPECT_EQ(distance_to_point(line({0, 1, 3}), 0), (std::vector<double>{0, 1, 3}));
  const auto eq = validate_matrix({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
  EXPECT_EQ(distance_to_point(eq, 1), (std::vector<double>{2, 0, 2}));
  EXPECT_EQ(code_of([&] { distance_to_point(eq, 3); }), Errc::IndexOutOfRange);
}

TEST(ChainLength, Examples) {
  const std::vector<Point> path{{0, 0}, {1, 0}, {1, 1}};
  EXPECT_EQ(chain_length(path), 2.0);
  EXPECT_EQ(chain_length(std::vector<Point>{{0.5, 0.5}}), 0.0);
  EXPECT_NEAR(koch(2).length(), 16.0 / 9.0, 1e-12);
  const auto d = line({0, 1, 3});
  const std::vector<std::size_t> seq{0, 2, 1};
  EXPECT_EQ(chain_length(d, seq), 5.0);
  EXPECT_EQ(code_of([] { chain_length(std::vector<Point>{}); }), Errc::EmptySequence);
}

TEST(NaturalParametrization, Examples) {
  const auto d = line({0, 1, 3});
  const std::vector<std::size_t> seq{0, 1, 2};
  EXPECT_EQ(natural_parametrization(d, seq).params(), (std::vector<double>{0, 1, 3}));

  const double s = 0.3;
  const auto eq = validate_matrix({{0, s, s}, {s, 0, s}, {s, s, 0}});
  const auto tour = natural_parametrization(eq, seq);
  EXPECT_EQ(tour.params(), (std::vector<double>{0, s, s + s}));

  const auto k1 = natural_parametrization(koch(1).coords());
  const std::vector<double> expect{0, 1.0 / 3, 2.0 / 3, 1, 4.0 / 3};
  ASSERT_EQ(k1.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(k1.params()[k], expect[k], 1e-15);

  const std::vector<std::size_t> stutter{0, 1, 1};
  EXPECT_EQ(code_of([&] { natural_parametrization(d, stutter); }), Errc::RepeatedConsecutivePoint);
  const std::vector<std::size_t> outside{0, 4};
  EXPECT_EQ(code_of([&] { natural_parametrization(d, outside); }), Errc::IndexOutOfRange);
}

TEST(SampledCurve, Validation) {
  EXPECT_EQ(code_of([] { SampledCurve::embedded({0, 0}, {{0}, {1}}); }), Errc::NonIncreasingParams);
  EXPECT_EQ(code_of([] { SampledCurve::embedded({0, 1}, {{0}}); }), Errc::CountMismatch);
  EXPECT_EQ(code_of([] { SampledCurve::embedded({0, 1}, {{0}, {1, 2}}); }), Errc::DimensionMismatch);
  auto space = std::make_shared<const DistanceMatrix>(line({0, 1}));
  EXPECT_EQ(code_of([&] { SampledCurve::in_space({0, 1}, {0, 2}, space); }), Errc::IndexOutOfRange);
}

TEST(CurveHolderConstant, StraightLineIsIsometric) {
  const auto r = curve_holder_constant(straight_segment(3, 2), 1.0);
  EXPECT_EQ(r.constant, 1.0);
}

TEST(CurveHolderConstant, KochUniformParams) {
  const auto r = curve_holder_constant(koch(3), 1.0);
  EXPECT_GE(r.constant, std::pow(4.0 / 3.0, 3) - 1e-12);
}

TEST(CurveHolderConstant, SmallExponentSeesDiameter) {
  const auto curve = koch(2);
  double diameter = 0.0;
  for (std::size_t k = 0; k < curve.size(); ++k)
    for (std::size_t l = k + 1; l < curve.size(); ++l) diameter = std::max(diameter, curve.distance(k, l));
  EXPECT_GE(curve_holder_constant(curve, 1e-6).constant, diameter);
}

TEST(CriticalExponent, DyadicSegmentClosedForm) {
  std::vector<SampledCurve> curves;
  const auto levels = range(1, 6);
  for (int n : levels) curves.push_back(straight_segment(n, 2));
  const auto grid = default_exponent_grid();
  const auto est = critical_exponent(curves, levels, grid);
  for (std::size_t li = 0; li < levels.size(); ++li)
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double expect = std::max(1.0, std::pow(2.0, levels[li] * (grid[g] - 1.0)));
      EXPECT_NEAR(est.constants[li][g], expect, 1e-12 * expect);
    }
  ASSERT_TRUE(est.estimate.has_value());
  EXPECT_NEAR(*est.estimate, 1.0, 1e-12);
}

TEST(CriticalExponent, Koch) {
  std::vector<SampledCurve> curves;
  const auto levels = range(1, 6);
  for (int n : levels) curves.push_back(koch(n));
  const auto est = critical_exponent(curves, levels, exponent_grid(0.01, 0.01, 1.5));
  ASSERT_TRUE(est.estimate.has_value());
  EXPECT_NEAR(*est.estimate, std::log(3.0) / std::log(4.0), 0.03);
}

TEST(CriticalExponent, CantorStaircase) {
  std::vector<SampledCurve> curves;
  const auto levels = range(1, 8);
  for (int n : levels) curves.push_back(cantor_staircase(n));
  const auto est = critical_exponent(curves, levels, exponent_grid(0.01, 0.01, 1.5));
  ASSERT_TRUE(est.estimate.has_value());
  EXPECT_NEAR(*est.estimate, std::log(2.0) / std::log(3.0), 0.03);
}

TEST(CriticalExponent, CantorEndpointsWithUniformParamsNeverBounded) {
  std::vector<SampledCurve> curves;
  const auto levels = range(1, 8);
  for (int n : levels) {
    std::vector<double> params;
    std::vector<Point> pts;
    const auto xs = cantor_endpoints(n);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      params.push_back(static_cast<double>(k) / static_cast<double>(xs.size()));
      pts.push_back({xs[k]});
    }
    curves.push_back(SampledCurve::embedded(params, pts));
  }
  const auto est = critical_exponent(curves, levels, default_exponent_grid());
  EXPECT_FALSE(est.estimate.has_value());
  for (double rate : est.growth_rates) EXPECT_GT(rate, kDefaultSlopeTolerance);
}

TEST(CriticalExponent, Errors) {
  std::vector<SampledCurve> two{koch(1), koch(2)};
  const std::vector<int> l2{1, 2};
  const auto grid = default_exponent_grid();
  EXPECT_EQ(code_of([&] { critical_exponent(two, l2, grid); }), Errc::TooFewLevels);
  std::vector<SampledCurve> three{koch(1), koch(2), koch(3)};
  const std::vector<int> same{2, 2, 2};
  EXPECT_EQ(code_of([&] { critical_exponent(three, same, grid); }), Errc::TooFewLevels);
  const std::vector<int> l3{1, 2, 3};
  const std::vector<double> bad{0.5, 1.6};
  EXPECT_EQ(code_of([&] { critical_exponent(three, l3, bad); }), Errc::InvalidGrid);
  EXPECT_EQ(code_of([&] { critical_exponent(two, l3, grid); }), Errc::CountMismatch);
  EXPECT_EQ(code_of([] { exponent_grid(0.5, -0.1, 1.0); }), Errc::InvalidGrid);
}

TEST(ExponentGrid, Default) {
  const auto g = default_exponent_grid();
  ASSERT_EQ(g.size(), 30u);
  EXPECT_EQ(g.front(), 0.05);
  EXPECT_EQ(g.back(), 1.5);
  EXPECT_EQ(g[19], 1.0);
}

TEST(HolderProperty, DistanceFunctionIsOneLipschitz) {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_metric(rng, 2 + rng.index(12));
    for (std::size_t p = 0; p < d.size(); ++p) {
      const auto f = distance_to_point(d, p);
      double worst = 0.0;
      for (std::size_t x = 0; x < d.size(); ++x)
        for (std::size_t y = x + 1; y < d.size(); ++y) worst = std::max(worst, std::abs(f[x] - f[y]) / d(x, y));
      EXPECT_LE(worst, 1.0 + 1e-12);
      EXPECT_GE(worst, 1.0 - 1e-12);
    }
  }
}

TEST(HolderProperty, LengthBoundUnderNaturalParametrization) {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    auto space = std::make_shared<const DistanceMatrix>(random_metric(rng, 3 + rng.index(10)));
    std::vector<std::size_t> seq{rng.index(space->size())};
    const std::size_t len = 2 + rng.index(20);
    while (seq.size() < len) {
      const std::size_t next = rng.index(space->size());
      if (next != seq.back()) seq.push_back(next);
    }
    const auto curve = natural_parametrization(*space, seq);
    EXPECT_EQ(curve_holder_constant(curve, 1.0, PairScope::Consecutive).constant, 1.0);
    const double bound = curve_holder_constant(curve, 1.0).constant * curve.span();
    EXPECT_LE(chain_length(*space, seq), bound + 1e-9);
  }
}

TEST(HolderProperty, MonotoneInExponent) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 3 + rng.index(10);
    std::vector<double> small, large;
    std::vector<Point> pts;
    double ts = 0.0, tl = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      small.push_back(ts);
      large.push_back(tl);
      ts += rng.uniform(0.01, 1.0 / static_cast<double>(m));
      tl += rng.uniform(1.0, 3.0);
      pts.push_back({rng.uniform(), rng.uniform()});
    }
    const auto fine = SampledCurve::embedded(small, pts);
    const auto coarse = SampledCurve::embedded(large, pts);
    double prev_fine = 0.0, prev_coarse = std::numeric_limits<double>::infinity();
    for (double a : {0.1, 0.4, 0.8, 1.0, 1.3}) {
      const double f = curve_holder_constant(fine, a).constant;
      const double c = curve_holder_constant(coarse, a).constant;
      EXPECT_GE(f, prev_fine);
      EXPECT_LE(c, prev_coarse);
      prev_fine = f;
      prev_coarse = c;
    }
  }
}

TEST(HolderProperty, SnowflakeDuality) {
  Rng rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const auto dom = random_metric(rng, 3 + rng.index(8));
    const auto cod = random_metric(rng, 3 + rng.index(8));
    PointMap f;
    for (std::size_t i = 0; i < dom.size(); ++i) f.image.push_back(rng.index(cod.size()));
    const double a = rng.uniform(0.2, 1.5), b = rng.uniform(0.1, 1.0);
    const double lhs = holder_constant(dom, snowflake(cod, b).space, f, a * b).constant;
    const double rhs = std::pow(holder_constant(dom, cod, f, a).constant, b);
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, rhs));
  }
}

}  // namespace
}  // namespace mspace
