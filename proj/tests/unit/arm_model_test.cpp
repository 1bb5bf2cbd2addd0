#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bandit_lab/arm_model.hpp"
#include "bandit_lab/error.hpp"
#include "bandit_lab/scenario.hpp"
#include "oracles.hpp"

namespace bandit_lab {
namespace {

TEST(ArmModel, GilbertElliotAnalytics) {
  const auto arm = ArmModel::gilbert_elliot(0.01, 0.03, 0.1, 1.0);
  EXPECT_EQ(arm.num_states(), 2u);
  EXPECT_NEAR(arm.stationary()(1), 0.25, 1e-12);
  EXPECT_NEAR(arm.mean_reward(), 0.325, 1e-12);
  EXPECT_NEAR(arm.min_stationary(), 0.25, 1e-12);
  EXPECT_DOUBLE_EQ(arm.max_reward(), 1.0);
  EXPECT_NEAR(arm.max_hitting_time(), 100.0, 1e-9);
  EXPECT_NEAR(arm.eigenvalue_gap(GapConvention::Symmetrized), 0.0784, 1e-12);
  EXPECT_NEAR(arm.eigenvalue_gap(GapConvention::Raw), 0.04, 1e-12);
  EXPECT_EQ(arm.labels().at(0), "bad");
  EXPECT_EQ(arm.labels().at(1), "good");
}

TEST(ArmModel, ClosedFormsOverParameterGrid) {
  for (double p01 : {0.01, 0.1, 0.35, 0.7})
    for (double p10 : {0.02, 0.2, 0.5}) {
      const oracle::TwoState ch{p01, p10};
      const auto arm = ArmModel::gilbert_elliot(p01, p10, 0.1, 1.0);
      EXPECT_NEAR(arm.stationary()(1), ch.pi1(), 1e-12);
      EXPECT_NEAR(arm.hitting_times()(0, 1), ch.hit01(), 1e-9 * ch.hit01());
      EXPECT_NEAR(arm.hitting_times()(1, 0), ch.hit10(), 1e-9 * ch.hit10());
      EXPECT_NEAR(arm.eigenvalue_gap(GapConvention::Raw), 1.0 - ch.lambda2_raw(), 1e-12);
      EXPECT_NEAR(arm.eigenvalue_gap(GapConvention::Symmetrized),
                  1.0 - ch.lambda2_symmetrized(), 1e-12);
    }
}

TEST(ArmModel, RejectsNonPositiveRewardsAndSizeMismatch) {
  const TransitionMatrix p(oracle::TwoState{0.1, 0.2}.matrix());
  EXPECT_THROW(ArmModel(p, {0.0, 1.0}), Error);
  EXPECT_THROW(ArmModel(p, {-1.0, 1.0}), Error);
  EXPECT_THROW(ArmModel(p, {1.0}), Error);
  EXPECT_THROW(ArmModel(p, {1.0, 2.0}, {"only"}), Error);
}

TEST(ArmModel, SingleStateArm) {
  const ArmModel arm(TransitionMatrix(Eigen::MatrixXd::Ones(1, 1)), {0.7});
  EXPECT_DOUBLE_EQ(arm.mean_reward(), 0.7);
  EXPECT_EQ(arm.max_hitting_time(), 0.0);
  RandomStream rng(3);
  EXPECT_EQ(arm.step({0}, rng).index, 0u);
  EXPECT_EQ(rng.draws(), 1u);
}

TEST(ArmModel, StepConsumesExactlyOneUniform) {
  const auto arm = ArmModel::gilbert_elliot(0.3, 0.4, 0.1, 1.0);
  RandomStream rng(9);
  ArmState s{0};
  for (int k = 1; k <= 1000; ++k) {
    s = arm.step(s, rng);
    EXPECT_EQ(rng.draws(), static_cast<std::uint64_t>(k));
  }
  (void)arm.sample_stationary(rng);
  EXPECT_EQ(rng.draws(), 1001u);
}

TEST(ArmModel, StepIsInverseCdfInNaturalOrder) {
  Eigen::MatrixXd m(3, 3);
  m << 0.2, 0.3, 0.5, 0.4, 0.4, 0.2, 1.0 / 3, 1.0 / 3, 1.0 / 3;
  const ArmModel arm(TransitionMatrix(m), {1, 2, 3});
  RandomStream a(77), b(77);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t from = static_cast<std::size_t>(k % 3);
    const double u = b.uniform();
    std::size_t expected = 0;
    double acc = m(from, 0);
    while (u >= acc && expected < 2) acc += m(from, ++expected);
    EXPECT_EQ(arm.step({from}, a).index, expected);
  }
}

TEST(ArmModel, SameSeedSamePath) {
  const auto arm = ArmModel::gilbert_elliot(0.05, 0.08, 0.1, 1.0);
  RandomStream a(123), b(123);
  ArmState x{0}, y{0};
  for (int k = 0; k < 10000; ++k) {
    x = arm.step(x, a);
    y = arm.step(y, b);
    ASSERT_EQ(x, y);
  }
}

TEST(ArmModel, LongRunFrequencyMatchesStationary) {
  const auto arm = ArmModel::gilbert_elliot(0.01, 0.03, 0.1, 1.0);
  RandomStream rng(2024);
  ArmState s = arm.sample_stationary(rng);
  std::uint64_t good = 0;
  constexpr std::uint64_t kSteps = 1'000'000;
  for (std::uint64_t k = 0; k < kSteps; ++k) {
    s = arm.step(s, rng);
    good += s.index;
  }
  EXPECT_NEAR(static_cast<double>(good) / kSteps, 0.25, 0.002);
}

TEST(ArmModel, SimulatedHittingTimesMatchAnalytics) {
  const auto arm = ArmModel::gilbert_elliot(0.05, 0.2, 0.1, 1.0);
  RandomStream rng(5);
  double sum = 0.0, sum_sq = 0.0;
  constexpr int kTrials = 50000;
  for (int k = 0; k < kTrials; ++k) {
    ArmState s{0};
    double steps = 0.0;
    do {
      s = arm.step(s, rng);
      steps += 1.0;
    } while (s.index != 1);
    sum += steps;
    sum_sq += steps * steps;
  }
  const double mean = sum / kTrials;
  const double se = std::sqrt((sum_sq / kTrials - mean * mean) / (kTrials - 1));
  EXPECT_LE(std::abs(mean - arm.hitting_times()(0, 1)), 3.0 * se);
}

// Over a regenerative cycle started in state g, the expected number of
// visits to y is pi_y / pi_g, so reward per cycle minus mu times cycle
// length has mean zero.
TEST(ArmModel, RegenerativeCycleRewardIdentity) {
  Eigen::MatrixXd m(3, 3);
  m << 0.5, 0.3, 0.2, 0.1, 0.6, 0.3, 0.4, 0.4, 0.2;
  const ArmModel arm(TransitionMatrix(m), {0.2, 0.5, 1.0});
  for (std::size_t gamma = 0; gamma < 3; ++gamma) {
    RandomStream rng(100 + gamma);
    double sum = 0.0, sum_sq = 0.0, length_total = 0.0;
    constexpr int kCycles = 40000;
    for (int c = 0; c < kCycles; ++c) {
      ArmState s{gamma};
      double reward = 0.0, length = 0.0;
      do {
        reward += arm.reward(s);
        length += 1.0;
        s = arm.step(s, rng);
      } while (s.index != gamma);
      const double d = reward - arm.mean_reward() * length;
      sum += d;
      sum_sq += d * d;
      length_total += length;
    }
    const double mean = sum / kCycles;
    const double se = std::sqrt((sum_sq / kCycles - mean * mean) / (kCycles - 1));
    EXPECT_LE(std::abs(mean), 3.0 * se) << "gamma=" << gamma;
    EXPECT_NEAR(length_total / kCycles, 1.0 / arm.stationary()(gamma),
                0.05 / arm.stationary()(gamma));
  }
}

TEST(ArmModel, RawGapUnavailableForNonReversibleChain) {
  Eigen::MatrixXd m(3, 3);
  m << 0.1, 0.6, 0.3, 0.2, 0.1, 0.7, 0.6, 0.3, 0.1;
  const ArmModel arm(TransitionMatrix(m), {1, 2, 3});
  try {
    arm.eigenvalue_gap(GapConvention::Raw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ComplexSpectrum);
  }
  EXPECT_GT(arm.eigenvalue_gap(GapConvention::Symmetrized), 0.0);
}

TEST(ArmModel, ReducibleSymmetrizationStillSimulates) {
  Eigen::MatrixXd m(3, 3);
  m << 0.5, 0.5, 0, 0, 0, 1, 1, 0, 0;
  const ArmModel arm(TransitionMatrix(m), {1, 2, 3});
  EXPECT_FALSE(arm.symmetrization_irreducible());
  EXPECT_THROW(arm.symmetrization(), Error);
  EXPECT_THROW(arm.eigenvalue_gap(GapConvention::Symmetrized), Error);
  RandomStream rng(1);
  EXPECT_NO_THROW(arm.step({0}, rng));
}

TEST(Scenario, BuiltinMeansAndOptimum) {
  const auto s1 = scenario_s1();
  const std::vector<double> expected1{0.325, 0.82, 0.775, 0.7, 0.4};
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_NEAR(s1.arm(i).mean_reward(), expected1[i], 1e-12);
  EXPECT_EQ(s1.optimal_arm(), 1u);

  const auto s2 = scenario_s2();
  EXPECT_EQ(s2.optimal_arm(), 2u);
  EXPECT_NEAR(s2.optimal_mean(), 0.1 + 0.9 * 5.0 / 6.0, 1e-12);
  EXPECT_TRUE(find_builtin_scenario("S1").has_value());
  EXPECT_FALSE(find_builtin_scenario("S9").has_value());
}

TEST(Scenario, RejectsTiedOptimum) {
  std::vector<ArmModel> arms{ArmModel::gilbert_elliot(0.1, 0.2, 0.1, 1.0),
                             ArmModel::gilbert_elliot(0.1, 0.2, 0.1, 1.0)};
  try {
    Scenario("tie", arms);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbiguousOptimum);
  }
  EXPECT_THROW(Scenario("empty", {}), Error);
}

}  // namespace
}  // namespace bandit_lab
