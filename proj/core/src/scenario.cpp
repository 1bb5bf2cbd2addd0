#include "bandit_lab/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace bandit_lab {

std::size_t unique_argmax(std::span<const double> means) {
  if (means.empty()) throw Error(ErrorCode::InvalidArgument, "no arms");
  std::size_t best = 0;
  for (std::size_t i = 1; i < means.size(); ++i)
    if (means[i] > means[best]) best = i;
  for (std::size_t i = 0; i < means.size(); ++i) {
    if (i != best && std::abs(means[i] - means[best]) <= kOptimumTieTolerance)
      throw Error(ErrorCode::AmbiguousOptimum,
                  "arms " + std::to_string(best + 1) + " and " + std::to_string(i + 1) +
                      " share the highest mean reward");
  }
  return best;
}

Scenario::Scenario(std::string name, std::vector<ArmModel> arms)
    : name_(std::move(name)), arms_(std::move(arms)) {
  if (arms_.empty()) throw Error(ErrorCode::InvalidArgument, "scenario needs at least one arm");
  const std::vector<double> means = mean_rewards();
  optimal_arm_ = unique_argmax(means);
}

std::vector<double> Scenario::mean_rewards() const {
  std::vector<double> means;
  means.reserve(arms_.size());
  for (const auto& arm : arms_) means.push_back(arm.mean_reward());
  return means;
}

double Scenario::max_reward() const {
  double out = 0.0;
  for (const auto& arm : arms_) out = std::max(out, arm.max_reward());
  return out;
}

namespace {

Scenario make_gilbert_elliot(std::string name,
                             const std::array<std::pair<double, double>, 5>& channels) {
  std::vector<ArmModel> arms;
  for (const auto& [p01, p10] : channels)
    arms.push_back(ArmModel::gilbert_elliot(p01, p10, 0.1, 1.0));
  return Scenario(std::move(name), std::move(arms));
}

}  // namespace

Scenario scenario_s1() {
  return make_gilbert_elliot(
      "S1", {{{0.01, 0.03}, {0.04, 0.01}, {0.03, 0.01}, {0.02, 0.01}, {0.01, 0.02}}});
}

Scenario scenario_s2() {
  return make_gilbert_elliot(
      "S2", {{{0.1, 0.2}, {0.1, 0.3}, {0.5, 0.1}, {0.1, 0.4}, {0.1, 0.5}}});
}

std::vector<Scenario> builtin_scenarios() { return {scenario_s1(), scenario_s2()}; }

std::optional<Scenario> find_builtin_scenario(std::string_view name) {
  if (name == "S1" || name == "s1") return scenario_s1();
  if (name == "S2" || name == "s2") return scenario_s2();
  return std::nullopt;
}

}  // namespace bandit_lab
