#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bandit_lab/arm_model.hpp"

namespace bandit_lab {

inline constexpr double kOptimumTieTolerance = 1e-12;

// An ordered set of K >= 1 arms with a unique best mean reward.
class Scenario {
 public:
  // Throws InvalidArgument (no arms) or AmbiguousOptimum.
  Scenario(std::string name, std::vector<ArmModel> arms);

  const std::string& name() const noexcept { return name_; }
  std::size_t num_arms() const noexcept { return arms_.size(); }
  const std::vector<ArmModel>& arms() const noexcept { return arms_; }
  const ArmModel& arm(std::size_t i) const { return arms_.at(i); }

  std::size_t optimal_arm() const noexcept { return optimal_arm_; }
  double optimal_mean() const noexcept { return arms_[optimal_arm_].mean_reward(); }
  std::vector<double> mean_rewards() const;
  double max_reward() const;

 private:
  std::string name_;
  std::vector<ArmModel> arms_;
  std::size_t optimal_arm_ = 0;
};

// Index of the unique maximum; throws AmbiguousOptimum when the two largest
// values are within kOptimumTieTolerance.
std::size_t unique_argmax(std::span<const double> means);

// Gilbert-Elliot scenarios with five two-state channels each, rewards
// (0.1, 1) for (bad, good).
Scenario scenario_s1();
Scenario scenario_s2();
std::vector<Scenario> builtin_scenarios();
std::optional<Scenario> find_builtin_scenario(std::string_view name);

}  // namespace bandit_lab
