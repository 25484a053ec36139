#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hcr/diagnostics.hpp"

using namespace hcr;

using Vec = std::vector<double>;

TEST(L1Error, Examples) {
  const Vec a{0.3, -1.2, 4.0};
  EXPECT_EQ(l1_error(a, a), 0.0);
  EXPECT_NEAR(l1_error(Vec{0.4, -1.1, 4.1}, a), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(l1_error(Vec{0, 1}, Vec{1, 1}), 0.5);
  EXPECT_THROW(l1_error(Vec{0, 1}, Vec{1}), std::invalid_argument);
  EXPECT_THROW(l1_error(Vec{}, Vec{}), std::invalid_argument);
}

TEST(L1Error, IsAMetric) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> v(-5, 5);
  for (int t = 0; t < 200; ++t) {
    Vec a(17), b(17), c(17);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = v(rng);
      b[i] = v(rng);
      c[i] = v(rng);
    }
    EXPECT_EQ(l1_error(a, b), l1_error(b, a));
    EXPECT_GT(l1_error(a, b), 0.0);
    EXPECT_LE(l1_error(a, c), l1_error(a, b) + l1_error(b, c) + 1e-15);
  }
}

TEST(Indicator, Examples) {
  EXPECT_EQ(convexity_indicator(Vec{0, 1, 2, 5}), (Vec{0.5, 0.5, 0.5}));
  EXPECT_EQ(convexity_indicator(Vec{2, 2, 2}), (Vec{0, 0}));
  EXPECT_EQ(convexity_indicator(Vec{0, 1, 1, 0}), (Vec{0.5, 0, -0.5}));
  EXPECT_TRUE(convexity_indicator(Vec{1}).empty());
}

TEST(Indicator, DeadBand) {
  EXPECT_EQ(convexity_indicator(Vec{0, 1e-14, 1}, 1e-12), (Vec{0, 0.5}));
  EXPECT_EQ(convexity_indicator(Vec{0, 1e-14, 1}), (Vec{0.5, 0.5}));
}

TEST(Indicator, PeriodicAddsSeam) {
  EXPECT_EQ(convexity_indicator_periodic(Vec{0, 1, 1, 0}), (Vec{0.5, 0, -0.5, 0}));
  EXPECT_EQ(convexity_indicator_periodic(Vec{0, 1, 2}), (Vec{0.5, 0.5, -0.5}));
}

TEST(Indicator, ShiftInvariantAndOddUnderNegation) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> v(-3, 3);
  for (int t = 0; t < 100; ++t) {
    Vec f(30);
    for (double& x : f) x = v(rng);  // integer data so the shift is exact
    Vec shifted = f;
    Vec neg = f;
    for (double& x : shifted) x += 1024.0;
    for (double& x : neg) x = -x;
    const Vec p = convexity_indicator(f);
    EXPECT_EQ(convexity_indicator(shifted), p);
    Vec pn = convexity_indicator(neg);
    for (double& x : pn) x = -x + 0.0;
    EXPECT_EQ(pn, p);
  }
}

TEST(Regions, Examples) {
  EXPECT_EQ(count_sign_regions(Vec{0.5, 0.5, 0, -0.5}), (SignRegions{1, 1}));
  EXPECT_EQ(count_sign_regions(Vec{0, 0, 0}), (SignRegions{0, 0}));
  EXPECT_EQ(count_sign_regions(Vec{0.5, -0.5, 0.5, 0, -0.5}), (SignRegions{2, 2}));
  EXPECT_EQ(count_sign_regions(Vec{}), (SignRegions{0, 0}));
  EXPECT_EQ(count_sign_regions(Vec{0.5, 0, 0.5}), (SignRegions{2, 0}));
}

TEST(Regions, CyclicMergesSeamRun) {
  const Vec p{-0.5, 0, 0.5, 0.5, 0, -0.5};
  EXPECT_EQ(count_sign_regions(p), (SignRegions{1, 2}));
  EXPECT_EQ(count_sign_regions(p, true), (SignRegions{1, 1}));
  // A single run covering everything stays one run.
  EXPECT_EQ(count_sign_regions(Vec{0.5, 0.5, 0.5}, true), (SignRegions{1, 0}));
  EXPECT_EQ(count_sign_regions(Vec{0.5, -0.5, 0.5}, true), (SignRegions{1, 1}));
}

TEST(Regions, MonotoneArrays) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> step(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    Vec up(40);
    double x = 0.0;
    for (double& v : up) v = (x += step(rng) + 1e-3);
    EXPECT_EQ(count_sign_regions(convexity_indicator(up)), (SignRegions{1, 0}));
    for (double& v : up) v = -v;
    EXPECT_EQ(count_sign_regions(convexity_indicator(up)), (SignRegions{0, 1}));
  }
}

TEST(Regions, PiecewiseMonotoneCountsRuns) {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> runs(1, 12);
  std::bernoulli_distribution flat(0.3);
  for (int t = 0; t < 200; ++t) {
    const int r = runs(rng);
    Vec f{0.0};
    double dir = t % 2 ? 1.0 : -1.0;
    for (int k = 0; k < r; ++k) {
      for (int j = len(rng); j > 0; --j) f.push_back(f.back() + dir);
      if (flat(rng)) f.push_back(f.back());  // plateaus do not add runs
      dir = -dir;
    }
    const SignRegions s = count_sign_regions(convexity_indicator(f));
    EXPECT_EQ(s.positive + s.negative, static_cast<std::size_t>(r));
  }
}

TEST(Extrema, Examples) {
  auto e = field_extrema(Vec{2.5, 2.5});
  EXPECT_EQ(e.max, 2.5);
  EXPECT_EQ(e.min, 2.5);
  e = field_extrema(Vec{0, 1, 0.5});
  EXPECT_EQ(e.max, 1.0);
  EXPECT_EQ(e.min, 0.0);
  EXPECT_THROW(field_extrema(Vec{}), std::invalid_argument);
}

TEST(Diagnose, FillsRecord) {
  const Vec f{0, 1, 1, 0, 0};
  const Vec exact{0, 1, 1, 0, 0.5};
  DiagnosticsRecord r = diagnose(7, f, std::span<const double>(exact));
  EXPECT_EQ(r.step, 7u);
  ASSERT_TRUE(r.l1_error.has_value());
  EXPECT_DOUBLE_EQ(*r.l1_error, 0.1);
  EXPECT_EQ(r.f_max, 1.0);
  EXPECT_EQ(r.f_min, 0.0);
  EXPECT_EQ(r.pos_regions, 1u);
  EXPECT_EQ(r.neg_regions, 1u);

  r = diagnose(0, f);
  EXPECT_FALSE(r.l1_error.has_value());
}

TEST(Diagnose, PeriodicCountsAcrossSeam) {
  // Shifted hat wrapping round the seam: still one rise and one fall.
  const Vec f{1, 1, 0.5, 0, 0, 0.5};
  const DiagnosticsRecord open = diagnose(0, f);
  EXPECT_EQ(open.pos_regions + open.neg_regions, 2u);
  const Vec g{0.5, 1, 1, 0.5, 0.2, 0.1, 0.2};
  const DiagnosticsRecord r = diagnose(0, g, std::nullopt, true);
  EXPECT_EQ(r.pos_regions, 1u);
  EXPECT_EQ(r.neg_regions, 1u);
  EXPECT_EQ(diagnose(0, g).pos_regions, 2u);
}
