#include "bandit_lab/ucb1_policy.hpp"

#include <cmath>
#include <limits>

#include "bandit_lab/error.hpp"

namespace bandit_lab {

std::size_t ucb1_select(std::span<const std::uint64_t> plays, std::span<const double> totals,
                        std::uint64_t slot_count, double exploration) {
  for (std::size_t i = 0; i < plays.size(); ++i)
    if (plays[i] == 0) return i;
  const double log_n = std::log(static_cast<double>(slot_count));
  std::size_t best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < plays.size(); ++i) {
    const double t = static_cast<double>(plays[i]);
    const double index = totals[i] / t + std::sqrt(exploration * log_n / t);
    if (index > best_index) {
      best_index = index;
      best = i;
    }
  }
  return best;
}

Ucb1Policy::Ucb1Policy(std::size_t num_arms, double exploration)
    : Policy(num_arms), exploration_(exploration), plays_(num_arms, 0), totals_(num_arms, 0.0) {
  if (!(exploration > 0.0) || !std::isfinite(exploration))
    throw Error(ErrorCode::InvalidArgument, "UCB1 exploration constant L must be positive");
}

std::size_t Ucb1Policy::choose() {
  if (slots_ >= num_arms()) ++index_evaluations_;
  return ucb1_select(plays_, totals_, slots_, exploration_);
}

void Ucb1Policy::learn(std::size_t arm, std::size_t, double reward) {
  ++slots_;
  ++plays_[arm];
  totals_[arm] += reward;
}

}  // namespace bandit_lab
