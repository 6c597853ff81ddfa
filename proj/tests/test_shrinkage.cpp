#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace fuzzyshrink;

namespace {

constexpr double kHalf4dp = 0.5e-4;

const FLRModel& fixture_of(const BuiltinDataset& b, const char* name) { return std::get<FLRModel>(*b.fixture(name)); }

// Component accessors in the order l, m, r.
double component(const Tfn& a, int c) { return c == 0 ? a.l() : c == 1 ? a.m() : a.r(); }

}  // namespace

TEST(ShrinkScalar, SteinExamples) {
  EXPECT_NEAR(shrink_value(-14.8998, 0.0044), -14.8995, kHalf4dp);
  EXPECT_NEAR(shrink_value(1.4670, 0.0044), 1.4640, kHalf4dp);
  EXPECT_EQ(shrink_value(0.0, 0.3), 0.0);
  EXPECT_DOUBLE_EQ(shrink_value(2.0, 1.0), 1.5);
  EXPECT_DOUBLE_EQ(shrink_value(0.5, 1.0), -1.5);
  EXPECT_THROW(shrink_value(1.0, 0.0), DomainError);
  EXPECT_THROW(shrink_value(1.0, -1.0), DomainError);
  EXPECT_THROW(shrink_value(1.0, std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(ShrinkScalar, PositiveRuleExamples) {
  EXPECT_EQ(shrink_positive(0.1565, 0.0972), 0.0);
  EXPECT_NEAR(shrink_positive(1.8469, 0.0972), 1.7943, kHalf4dp);
  // 0.0837 is itself rounded; some value in its rounding interval lands on the printed 0.0310.
  EXPECT_TRUE(fstest::consistent_with_rounding([](double v) { return shrink_positive(v, 0.0044); }, 0.0837,
                                               kHalf4dp, 0.0310, kHalf4dp));
  EXPECT_NEAR(shrink_positive(0.0837, 0.0044), 0.0310, 2e-4);
  EXPECT_EQ(shrink_positive(0.0, 1.0), 0.0);
  EXPECT_THROW(shrink_positive(-0.1, 0.5), DomainError);
  EXPECT_THROW(shrink_positive(0.1, 0.0), DomainError);
}

TEST(ShrinkScalar, PositivePartKeepsSign) {
  EXPECT_DOUBLE_EQ(shrink_positive_part(-2.0, 1.0), -1.5);
  EXPECT_EQ(shrink_positive_part(-0.5, 1.0), 0.0);
  EXPECT_EQ(shrink_positive_part(0.0, 1.0), 0.0);
}

TEST(ShrinkModel, Example2Exact) {
  const auto d2 = load_builtin(BuiltinId::Dataset2);
  const FLRModel shrunk = shrink_model(fixture_of(d2, "14a"), 0.0972);
  const auto& a = fixture_of(d2, "14a").coefficients;
  const auto& printed = fixture_of(d2, "14b").coefficients;
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(shrunk.coefficients[j].m(), printed[j].m(), 1e-4) << j;
    EXPECT_NEAR(shrunk.coefficients[j].l(), printed[j].l(), 1e-4) << j;
    EXPECT_TRUE(fstest::consistent_with_rounding([](double v) { return shrink_value(v, 0.0972); }, a[j].m(),
                                                 kHalf4dp, printed[j].m(), kHalf4dp))
        << j;
    EXPECT_TRUE(fstest::consistent_with_rounding([](double v) { return shrink_positive(v, 0.0972); }, a[j].l(),
                                                 kHalf4dp, printed[j].l(), kHalf4dp))
        << j;
  }
  EXPECT_EQ(shrunk.coefficients[1].l(), 0.0);
  EXPECT_EQ(shrunk.coefficients[1].r(), 0.0);
}

TEST(ShrinkModel, Example1SevenOfEight) {
  const auto d1 = load_builtin(BuiltinId::Dataset1);
  const auto& a = fixture_of(d1, "13a").coefficients;
  const auto& printed = fixture_of(d1, "13b").coefficients;
  const FLRModel shrunk = shrink_model(fixture_of(d1, "13a"), 0.0044);
  for (std::size_t j = 0; j < 4; ++j) {
    if (j != 2) {
      EXPECT_TRUE(fstest::consistent_with_rounding([](double v) { return shrink_value(v, 0.0044); }, a[j].m(),
                                                   kHalf4dp, printed[j].m(), kHalf4dp))
          << j;
    }
    EXPECT_TRUE(fstest::consistent_with_rounding([](double v) { return shrink_positive(v, 0.0044); }, a[j].l(),
                                                 kHalf4dp, printed[j].l(), kHalf4dp))
        << j;
  }
  // The printed x2 center (-0.99137) does not follow from -0.9558.
  EXPECT_NEAR(shrunk.coefficients[2].m(), -0.9512, 1e-4);
}

TEST(ShrinkModel, PolicyVariants) {
  const FLRModel m{{Tfn(1, 4, 2), Tfn(0.5, -2, 3)}};
  const double k = 0.5;
  const auto none = shrink_model(m, k, {CenterRule::None, SpreadRule::None, true});
  EXPECT_EQ(none, m);
  const auto no_intercept = shrink_model(m, k, {CenterRule::Stein, SpreadRule::PositiveStein, false});
  EXPECT_EQ(no_intercept.coefficients[0], m.coefficients[0]);
  EXPECT_DOUBLE_EQ(no_intercept.coefficients[1].m(), -2.0 + 0.25);
  EXPECT_EQ(no_intercept.coefficients[1].l(), 0.0);
  EXPECT_DOUBLE_EQ(no_intercept.coefficients[1].r(), 3.0 - 0.5 / 3.0);
  const auto positive = shrink_model(FLRModel{{Tfn(0, 0.5, 0)}}, 1.0, {CenterRule::PositiveStein});
  EXPECT_EQ(positive.coefficients[0].m(), 0.0);
  EXPECT_THROW(shrink_model(m, 0.0), DomainError);
}

TEST(ShrinkModel, FuzzyInputModel) {
  const auto d4 = load_builtin(BuiltinId::Dataset4);
  const auto& m17a = std::get<FuzzyInputModel>(*d4.fixture("17a"));
  const auto& m17b = std::get<FuzzyInputModel>(*d4.fixture("17b"));
  const auto s = shrink_model(m17a, 0.041);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(s.center_coeffs[j], m17b.center_coeffs[j], 0.005) << j;
    EXPECT_NEAR(s.spread_coeffs[j], m17b.spread_coeffs[j], 0.005) << j;
  }
  EXPECT_EQ(s.spread_coeffs[0], 0.0);
}

TEST(ShrinkModel, DefaultKMax) {
  const auto d2 = load_builtin(BuiltinId::Dataset2);
  EXPECT_DOUBLE_EQ(default_k_max(fixture_of(d2, "14a")), 5.0365 * 5.0365);
  EXPECT_DOUBLE_EQ(default_k_max(fixture_of(d2, "14a"), {CenterRule::Stein, SpreadRule::PositiveStein, false}),
                   1.6862 * 1.6862);
}

// ---------------------------------------------------------------------------
// Scalar and model properties

TEST(ShrinkProperty, PositiveRuleNonnegativeAndOddSymmetry) {
  fstest::Gen gen(501);
  for (int i = 0; i < 5000; ++i) {
    const double v = gen.uniform(0, 10) * (gen.coin() ? 1 : 1e-3);
    const double k = gen.uniform(1e-6, 20);
    EXPECT_GE(shrink_positive(v, k), 0.0);
    EXPECT_EQ(shrink_value(-v, k), -shrink_value(v, k));
  }
}

TEST(ShrinkProperty, GenuineShrinkageRegime) {
  fstest::Gen gen(502);
  for (int i = 0; i < 5000; ++i) {
    const double v = gen.uniform(-10, 10);
    const double k = gen.uniform(1e-6, 30);
    const double s = shrink_value(v, k);
    if (k <= v * v) {
      EXPECT_LE(std::abs(s), std::abs(v));
      EXPECT_GE(s * v, 0.0);
    } else {
      EXPECT_LT(s * v, 0.0);
    }
  }
}

TEST(ShrinkProperty, ComponentwiseAndPermutationCommutes) {
  fstest::Gen gen(503);
  for (int trial = 0; trial < 200; ++trial) {
    const FLRModel m = gen.flr_model(4);
    const double k = gen.uniform(1e-4, 2);
    std::vector<std::size_t> order{0, 1, 2, 3, 4};
    std::shuffle(order.begin(), order.end(), gen.engine());
    FLRModel permuted;
    for (auto j : order) permuted.coefficients.push_back(m.coefficients[j]);
    const auto a = shrink_model(permuted, k);
    const auto b = shrink_model(m, k);
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(a.coefficients[i], b.coefficients[order[i]]);
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(b.coefficients[j], shrink_coefficient(m.coefficients[j], k));
  }
}

TEST(ShrinkProperty, VanishingKConverges) {
  fstest::Gen gen(504);
  for (int trial = 0; trial < 200; ++trial) {
    const FLRModel m = gen.flr_model(3);
    double inv_max = 0.0, abs_max = 0.0;
    for (const auto& c : m.coefficients)
      for (int comp = 0; comp < 3; ++comp) {
        abs_max = std::max(abs_max, std::abs(component(c, comp)));
        if (component(c, comp) != 0.0) inv_max = std::max(inv_max, 1.0 / std::abs(component(c, comp)));
      }
    for (double k : {1e-3, 1e-6, 1e-9}) {
      const auto s = shrink_model(m, k);
      double dist = 0.0;
      for (std::size_t j = 0; j < m.coefficients.size(); ++j)
        for (int comp = 0; comp < 3; ++comp)
          dist = std::max(dist, std::abs(component(s.coefficients[j], comp) - component(m.coefficients[j], comp)));
      // The positive rule can only cut a spread to zero, which is never farther than the Stein step.
            // Slack of a few ulps of the largest component for the subtraction.
      EXPECT_LE(dist, k * inv_max + 4 * std::numeric_limits<double>::epsilon() * abs_max);
    }
  }
}

// ---------------------------------------------------------------------------
// k search

TEST(OptimizeK, Example2) {
  const auto d2 = load_builtin(BuiltinId::Dataset2);
  const auto& data = std::get<CrispInputDataset>(d2.data);
  const auto rep = optimize_k(fixture_of(d2, "14a"), data, GofMetric::dlr(), 1.0);
  EXPECT_NEAR(rep.k_star, 0.0972, 0.005);
  EXPECT_NEAR(rep.metric_shrunk, 5.85522, 0.005);
  EXPECT_NEAR(rep.boundary_sup, 0.2138, 0.01);
  EXPECT_TRUE(rep.improved);
  EXPECT_LE(rep.metric_shrunk, rep.metric_baseline);
  EXPECT_GE(rep.boundary_sup, rep.k_star);
  const auto boundary = optimal_boundary(fixture_of(d2, "14a"), data, GofMetric::dlr(), 1.0);
  EXPECT_EQ(boundary.sup, rep.boundary_sup);
}

TEST(OptimizeK, ThreadCountDoesNotChangeResult) {
  const auto d2 = load_builtin(BuiltinId::Dataset2);
  const auto& data = std::get<CrispInputDataset>(d2.data);
  const auto a = optimize_k(fixture_of(d2, "14a"), data, GofMetric::dlr(), 1.0, 1e-4, {{}, 1});
  const auto b = optimize_k(fixture_of(d2, "14a"), data, GofMetric::dlr(), 1.0, 1e-4, {{}, 3});
  EXPECT_EQ(a.k_star, b.k_star);
  EXPECT_EQ(a.metric_shrunk, b.metric_shrunk);
  EXPECT_EQ(a.boundary_sup, b.boundary_sup);
}

TEST(OptimizeK, ZeroResidualModelNeverImproves) {
  fstest::Gen gen(511);
  const FLRModel truth = gen.flr_model(2, true);
  const auto data = fstest::noiseless(truth, gen.inputs(10, 2));
  for (const auto& metric : {GofMetric::dlr(), GofMetric::dh(), GofMetric::d2_half()}) {
    const auto rep = optimize_k(truth, data, metric, 0.5, 1e-3);
    EXPECT_NEAR(rep.metric_baseline, 0.0, 1e-9);
    EXPECT_GE(rep.metric_shrunk, rep.metric_baseline);
    EXPECT_FALSE(rep.improved);
    EXPECT_EQ(rep.boundary_sup, 0.0);
    EXPECT_LE(rep.k_star, 1e-3);
    const auto boundary = optimal_boundary(truth, data, metric, 0.5, 1e-3);
    EXPECT_FALSE(boundary.improved);
    EXPECT_EQ(boundary.sup, 0.0);
  }
}

TEST(OptimizeK, Errors) {
  const auto d2 = load_builtin(BuiltinId::Dataset2);
  CrispInputDataset empty;
  empty.x.resize(0, 1);
  EXPECT_THROW(optimize_k(fixture_of(d2, "14a"), empty, GofMetric::dlr(), 1.0), DomainError);
  EXPECT_THROW(optimal_boundary(fixture_of(d2, "14a"), empty, GofMetric::dlr(), 1.0), DomainError);
  const auto& data = std::get<CrispInputDataset>(d2.data);
  EXPECT_THROW(optimize_k(fixture_of(d2, "14a"), data, GofMetric::dlr(), 0.0), DomainError);
  EXPECT_THROW(optimize_k(fixture_of(d2, "14a"), data, GofMetric::dlr(), 1.0, -1.0), DomainError);
}

TEST(OptimizeKProperty, NotWorseThanDenseGrid) {
  fstest::Gen gen(521);
  const GofMetric metrics[] = {GofMetric::dlr(), GofMetric::dh(), GofMetric::d2_half()};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t p = static_cast<std::size_t>(gen.integer(1, 3));
    const FLRModel truth = gen.flr_model(p, true);
    auto data = fstest::noiseless(truth, gen.inputs(12, p));
    for (auto& y : data.y) y = Tfn::symmetric(y.m() + gen.uniform(-3, 3), y.l() * gen.uniform(0.5, 1.5));
    const FLRModel model = fit_least_squares(data);
    const GofMetric metric = metrics[trial % 3];
    const double k_max = std::min(2.0, default_k_max(model));
    const double resolution = k_max / 200.0;
    const auto rep = optimize_k(model, data, metric, k_max, resolution);
    // Same domain as the search, k in (0, k_max].
    double dense_min = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 2000; ++i) dense_min = std::min(dense_min, shrunk_metric(model, data, metric, i * resolution / 10.0));
    EXPECT_LE(rep.metric_shrunk, dense_min + 1e-12) << "trial " << trial << " " << metric.name();
  }
}

TEST(OptimalBoundaryProperty, InteriorPointsImprove) {
  fstest::Gen gen(531);
  const auto d2 = load_builtin(BuiltinId::Dataset2);
  const auto d1 = load_builtin(BuiltinId::Dataset1);
  struct Case {
    const FLRModel* model;
    const CrispInputDataset* data;
    double k_max;
  };
  const Case cases[] = {{&fixture_of(d2, "14a"), &std::get<CrispInputDataset>(d2.data), 1.0},
                        {&fixture_of(d1, "13a"), &std::get<CrispInputDataset>(d1.data), 0.2}};
  for (const auto& c : cases) {
    const double resolution = 1e-4;
    const auto b = optimal_boundary(*c.model, *c.data, GofMetric::dlr(), c.k_max, resolution);
    ASSERT_TRUE(b.improved);
    const double baseline = shrunk_metric(*c.model, *c.data, GofMetric::dlr(), 0.0);
    for (int i = 0; i < 20; ++i) {
      const double k = gen.uniform(resolution * 1e-3, b.sup - resolution / 100.0);
      EXPECT_LT(shrunk_metric(*c.model, *c.data, GofMetric::dlr(), k), baseline) << "k = " << k;
    }
    EXPECT_GE(shrunk_metric(*c.model, *c.data, GofMetric::dlr(), b.sup + resolution / 50.0), baseline);
  }
}
