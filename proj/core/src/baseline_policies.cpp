#include "bandit_lab/baseline_policies.hpp"

#include <algorithm>

#include "bandit_lab/error.hpp"

namespace bandit_lab {

FixedArmPolicy::FixedArmPolicy(std::size_t num_arms, std::size_t arm, std::string label)
    : Policy(num_arms), arm_(arm), label_(std::move(label)) {
  if (arm_ >= num_arms)
    throw Error(ErrorCode::InvalidArgument, "fixed arm " + std::to_string(arm + 1) +
                                                " is out of range for " +
                                                std::to_string(num_arms) + " arms");
}

UniformRandomPolicy::UniformRandomPolicy(std::size_t num_arms, RandomStream rng)
    : Policy(num_arms), rng_(rng) {}

std::size_t UniformRandomPolicy::choose() {
  const auto k = num_arms();
  return std::min(k - 1, static_cast<std::size_t>(rng_.uniform() * static_cast<double>(k)));
}

}  // namespace bandit_lab
