#pragma once

#include <cstddef>
#include <string>

#include "bandit_lab/policy.hpp"
#include "bandit_lab/random_stream.hpp"

namespace bandit_lab {

// Always plays one arm. With the best arm this is the best single-action
// oracle against which regret is measured.
class FixedArmPolicy final : public Policy {
 public:
  FixedArmPolicy(std::size_t num_arms, std::size_t arm, std::string label);

  std::string label() const override { return label_; }
  std::size_t arm() const noexcept { return arm_; }

 private:
  std::size_t choose() override { return arm_; }
  void learn(std::size_t, std::size_t, double) override {}

  std::size_t arm_;
  std::string label_;
};

// Uniformly random arm each slot; a floor baseline.
class UniformRandomPolicy final : public Policy {
 public:
  UniformRandomPolicy(std::size_t num_arms, RandomStream rng);

  std::string label() const override { return "random"; }

 private:
  std::size_t choose() override;
  void learn(std::size_t, std::size_t, double) override {}

  RandomStream rng_;
};

}  // namespace bandit_lab
