#include "bandit_lab/exp3_policy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bandit_lab/arm_model.hpp"
#include "bandit_lab/error.hpp"

namespace bandit_lab {

std::vector<double> exp3_probabilities(std::span<const double> weights, double mix) {
  const double k = static_cast<double>(weights.size());
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<double> p(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    p[i] = (1.0 - mix) * (weights[i] / total) + mix / k;
  return p;
}

void exp3_update(std::vector<double>& weights, std::size_t played, double reward, double mix,
                 std::span<const double> probabilities) {
  const double k = static_cast<double>(weights.size());
  weights[played] *= std::exp(mix * reward / (k * probabilities[played]));
  const double largest = *std::max_element(weights.begin(), weights.end());
  if (largest > kExp3RescaleThreshold)
    for (double& w : weights) w /= largest;
}

double exp3_horizon_mix(std::size_t num_arms, std::uint64_t horizon) {
  if (num_arms < 2) return 1.0;
  const double k = static_cast<double>(num_arms);
  const double n = static_cast<double>(horizon);
  return std::min(1.0, std::sqrt(k * std::log(k) / ((std::numbers::e - 1.0) * n)));
}

Exp3Policy::Exp3Policy(std::size_t num_arms, double mix, double reward_scale, RandomStream rng)
    : Policy(num_arms),
      mix_(mix),
      reward_scale_(reward_scale),
      rng_(rng),
      weights_(num_arms, 1.0),
      probabilities_(num_arms, 1.0 / static_cast<double>(num_arms)) {
  if (!(mix > 0.0 && mix <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "Exp3 mixing parameter a must lie in (0, 1]");
  if (!(reward_scale > 0.0) || !std::isfinite(reward_scale))
    throw Error(ErrorCode::InvalidArgument, "Exp3 reward scale must be positive");
}

std::size_t Exp3Policy::choose() {
  probabilities_ = exp3_probabilities(weights_, mix_);
  std::vector<double> cumulative(probabilities_.size());
  std::partial_sum(probabilities_.begin(), probabilities_.end(), cumulative.begin());
  return inverse_cdf(cumulative, rng_.uniform());
}

void Exp3Policy::learn(std::size_t arm, std::size_t, double reward) {
  exp3_update(weights_, arm, reward / reward_scale_, mix_, probabilities_);
}

}  // namespace bandit_lab
