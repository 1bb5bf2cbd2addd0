#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bandit_lab/policy.hpp"
#include "bandit_lab/random_stream.hpp"

namespace bandit_lab {

inline constexpr double kExp3RescaleThreshold = 1e100;

// p_i = (1 - a) w_i / sum(w) + a / K.
std::vector<double> exp3_probabilities(std::span<const double> weights, double mix);

// Multiplies the played arm's weight by exp(a r / (K p_played)); `reward`
// must already be normalized to [0, 1]. Afterwards every weight is divided
// by the largest one if that exceeds kExp3RescaleThreshold, which leaves the
// probabilities unchanged.
void exp3_update(std::vector<double>& weights, std::size_t played, double reward, double mix,
                 std::span<const double> probabilities);

// a = min{1, sqrt(K ln K / ((e - 1) N))}; 1 for a single arm.
double exp3_horizon_mix(std::size_t num_arms, std::uint64_t horizon);

class Exp3Policy final : public Policy {
 public:
  // Rewards are divided by `reward_scale` (the scenario's largest reward)
  // before entering the exponent.
  Exp3Policy(std::size_t num_arms, double mix, double reward_scale, RandomStream rng);

  std::string label() const override { return "exp3"; }
  double mix() const noexcept { return mix_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  // Distribution used for the most recent draw.
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }

 private:
  std::size_t choose() override;
  void learn(std::size_t arm, std::size_t state, double reward) override;

  double mix_;
  double reward_scale_;
  RandomStream rng_;
  std::vector<double> weights_;
  std::vector<double> probabilities_;
};

}  // namespace bandit_lab
