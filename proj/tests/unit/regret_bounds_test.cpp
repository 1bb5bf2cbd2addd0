#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bandit_lab/error.hpp"
#include "bandit_lab/regret_bounds.hpp"
#include "oracles.hpp"

namespace bandit_lab {
namespace {

Scenario reduced_s1() {
  return Scenario("S1-reduced", {ArmModel::gilbert_elliot(0.01, 0.03, 0.1, 1.0),
                                 ArmModel::gilbert_elliot(0.04, 0.01, 0.1, 1.0)});
}

TEST(RegretBounds, Beta) {
  double partial = 0.0;
  for (int t = 1; t <= 2'000'000; ++t) partial += 1.0 / (static_cast<double>(t) * t);
  EXPECT_NEAR(kBeta, partial, 1e-6);
  EXPECT_NEAR(kBeta, std::numbers::pi * std::numbers::pi / 6.0, 1e-12);
}

TEST(RegretBounds, ThresholdRawConvention) {
  const double s1 = l_threshold(scenario_s1(), GapConvention::Raw);
  const double s2 = l_threshold(scenario_s2(), GapConvention::Raw);
  EXPECT_NEAR(s1, 112.0 * 4 * 0.64 / 0.03, 1e-9);
  EXPECT_NEAR(s2, 112.0 * 4 * (25.0 / 36.0) / 0.3, 1e-9);
  EXPECT_LE(std::abs(s1 - 9556.0) / 9556.0, 0.0015);
  EXPECT_LE(std::abs(s2 - 1037.2) / 1037.2, 0.0015);
}

TEST(RegretBounds, ThresholdSymmetrizedConvention) {
  const double s1 = l_threshold(scenario_s1());
  EXPECT_NEAR(s1, 112.0 * 4 * 0.64 / (1.0 - 0.97 * 0.97), 1e-9);
  EXPECT_LE(std::abs(s1 - 4851.4) / 4851.4, 0.001);
}

TEST(RegretBounds, ReportScalarsS1) {
  const auto r = compute_bound_report(scenario_s1(), GapConvention::Raw);
  EXPECT_NEAR(r.pi_min, 0.2, 1e-12);
  EXPECT_EQ(r.r_max, 1.0);
  EXPECT_EQ(r.s_max, 2u);
  EXPECT_NEAR(r.pi_hat_max, 0.8, 1e-12);
  EXPECT_NEAR(r.epsilon_min, 0.03, 1e-12);
  EXPECT_EQ(r.optimal_arm, 1u);
  EXPECT_NEAR(r.f, 0.82 * (1.0 / 0.2 + 100.0 + 1.0), 1e-9);
}

TEST(RegretBounds, ArmConstantsMatchClosedForms) {
  for (const auto& scenario : builtin_scenarios()) {
    for (auto convention : {GapConvention::Raw, GapConvention::Symmetrized}) {
      const auto r = compute_bound_report(scenario, convention);
      const double best_mean = r.optimal_mean;
      for (std::size_t i = 0; i < scenario.num_arms(); ++i) {
        const auto& arm = scenario.arm(i);
        const double p01 = arm.transition()(0, 1), p10 = arm.transition()(1, 0);
        const oracle::TwoState ch{p01, p10};
        const auto& t = r.arms[i];
        EXPECT_NEAR(t.min_stationary, std::min(ch.pi0(), ch.pi1()), 1e-10);
        EXPECT_NEAR(t.max_hitting_time, std::max(ch.hit01(), ch.hit10()), 1e-10);
        EXPECT_NEAR(t.eigenvalue_gap,
                    1.0 - (convention == GapConvention::Raw ? ch.lambda2_raw()
                                                            : ch.lambda2_symmetrized()),
                    1e-10);
        EXPECT_NEAR(t.d, 1.0 / t.min_stationary + t.max_hitting_time + 1.0, 1e-12);
        EXPECT_GT(t.c, 1.0);
        EXPECT_GT(t.d, 2.0);
        EXPECT_GT(t.e, 0.0);
        EXPECT_NEAR(t.gap_to_best, t.optimal ? 0.0 : best_mean - t.mean, 1e-15);
      }
      EXPECT_GT(r.f, 0.0);
    }
  }
}

TEST(RegretBounds, FOfS2) {
  const auto r = compute_bound_report(scenario_s2(), GapConvention::Raw);
  EXPECT_NEAR(r.pi_min, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.f, 14.45, 1e-10);
}

TEST(RegretBounds, PlayWeightedBoundReducedS1) {
  const auto s = reduced_s1();
  const auto r = compute_bound_report(s, GapConvention::Raw);
  const auto& ch1 = r.arms[0];
  EXPECT_NEAR(ch1.d, 105.0, 1e-9);
  EXPECT_NEAR(ch1.c, 1.0 + 4.0 * kBeta / 0.2, 1e-12);
  EXPECT_NEAR(ch1.c, 33.89868133696453, 1e-10);
  EXPECT_NEAR(ch1.gap_to_best, 0.495, 1e-12);

  const double log_part = 4.0 * 9557.3 * 105.0 * std::log(1e5) / 0.495;
  const double const_part = 0.495 * 105.0 * ch1.c;
  EXPECT_NEAR(log_part, 93360894.28, 0.01);
  EXPECT_NEAR(const_part, 1761.884, 1e-3);
  EXPECT_NEAR(theorem1_bound(s, 9557.3, 100000, GapConvention::Raw), log_part + const_part, 1e-6);
  // L = 9556 gives about 9.3349e7.
  EXPECT_NEAR(4.0 * 9556.0 * 105.0 * std::log(1e5) / 0.495, 9.3349e7, 1e3);
}

TEST(RegretBounds, PlayWeightedBoundLinearInL) {
  const auto r = compute_bound_report(scenario_s1());
  const double c0 = r.theorem1(0.0, 1000);
  const double a = r.theorem1(100.0, 1000) - c0;
  const double b = r.theorem1(200.0, 1000) - c0;
  EXPECT_NEAR(b, 2.0 * a, 1e-9 * b);
}

TEST(RegretBounds, SingleArmScenario) {
  const Scenario one("one", {ArmModel::gilbert_elliot(0.2, 0.3, 0.1, 1.0)});
  const auto r = compute_bound_report(one, GapConvention::Raw);
  EXPECT_EQ(r.theorem1(50.0, 1000), 0.0);
  EXPECT_NEAR(r.theorem2(50.0, 1000), r.f, 1e-15);
  const double mu = one.optimal_mean();
  EXPECT_NEAR(r.f, mu * (1.0 / 0.4 + 5.0 + 1.0), 1e-12);
}

TEST(RegretBounds, RegretBoundStructureAndMonotonicity) {
  const auto s = scenario_s2();
  const auto r = compute_bound_report(s, GapConvention::Raw);
  const double l = 1037.2;
  double log_sum = 0.0, constant = 0.0;
  for (const auto& t : r.arms) {
    if (t.optimal) continue;
    log_sum += (t.d + t.e / t.gap_to_best) / t.gap_to_best;
    constant += t.c * (t.gap_to_best * t.d + t.e);
  }
  for (std::uint64_t n : {10u, 1000u, 100000u})
    EXPECT_NEAR(r.theorem2(l, n), 4.0 * l * std::log(double(n)) * log_sum + constant + r.f,
                1e-9 * r.theorem2(l, n));
  EXPECT_NEAR(r.theorem2(l, 100000) - r.theorem2(l, 10000),
              4.0 * l * (std::log(1e5) - std::log(1e4)) * log_sum, 1e-6);

  double prev = 0.0;
  for (std::uint64_t n = 2; n < 1'000'000; n *= 3) {
    const double b = r.theorem2(l, n);
    EXPECT_GT(b, prev);
    prev = b;
  }
  EXPECT_GT(r.theorem2(2 * l, 1000), r.theorem2(l, 1000));
  EXPECT_LE(r.theorem1(l, 1000), r.theorem2(l, 1000));

  // A larger hitting time on one arm raises the bound.
  const Scenario slower("slower", {ArmModel::gilbert_elliot(0.05, 0.2, 0.1, 1.0),
                                   ArmModel::gilbert_elliot(0.5, 0.1, 0.1, 1.0)});
  const Scenario faster("faster", {ArmModel::gilbert_elliot(0.1, 0.4, 0.1, 1.0),
                                   ArmModel::gilbert_elliot(0.5, 0.1, 0.1, 1.0)});
  EXPECT_GT(theorem2_bound(slower, l, 1000, GapConvention::Raw),
            theorem2_bound(faster, l, 1000, GapConvention::Raw));
}

TEST(RegretBounds, PlayCountBound) {
  const auto r = compute_bound_report(scenario_s2(), GapConvention::Raw);
  EXPECT_EQ(r.play_count_bound(2, 1037.2, 100000), 0.0);
  const auto& t = r.arms[0];
  EXPECT_NEAR(r.play_count_bound(0, 1037.2, 100000),
              t.d * (4.0 * 1037.2 * std::log(1e5) / (t.gap_to_best * t.gap_to_best) + t.c), 1e-6);
  EXPECT_TRUE(r.below_threshold(10.0));
  EXPECT_FALSE(r.below_threshold(1037.2));
}

TEST(RegretBounds, ErrorsCarryArm) {
  Eigen::MatrixXd m(3, 3);
  m << 0.5, 0.5, 0, 0, 0, 1, 1, 0, 0;
  const Scenario s("bad", {ArmModel::gilbert_elliot(0.2, 0.3, 0.1, 1.0),
                           ArmModel(TransitionMatrix(m), {1, 2, 3})});
  try {
    compute_bound_report(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IrreducibilityViolated);
    EXPECT_EQ(e.arm(), std::optional<std::size_t>(1));
  }
}

}  // namespace
}  // namespace bandit_lab
