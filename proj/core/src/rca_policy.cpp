#include "bandit_lab/rca_policy.hpp"

#include <cmath>
#include <limits>

#include "bandit_lab/error.hpp"

namespace bandit_lab {

double rca_index(double reward_total, std::uint64_t sb2_plays, double sb2_clock,
                 double exploration) {
  const double plays = static_cast<double>(sb2_plays);
  return reward_total / plays + std::sqrt(exploration * std::log(sb2_clock) / plays);
}

RegenerativeCyclePolicy::RegenerativeCyclePolicy(std::size_t num_arms, double exploration)
    : Policy(num_arms),
      exploration_(exploration),
      sb2_plays_(num_arms, 0),
      block_counts_(num_arms, 0),
      sb2_rewards_(num_arms, 0.0),
      indices_(num_arms, std::numeric_limits<double>::quiet_NaN()),
      regenerative_states_(num_arms) {
  if (!(exploration > 0.0) || !std::isfinite(exploration))
    throw Error(ErrorCode::InvalidArgument, "RCA exploration constant L must be positive");
}

void RegenerativeCyclePolicy::accumulate_sb2(std::size_t arm, double reward) {
  ++sb2_slots_;
  ++sb2_plays_[arm];
  sb2_rewards_[arm] += reward;
  last_sub_block_ = SubBlock::SB2;
  phase_ = Phase::SB2;
}

void RegenerativeCyclePolicy::finish_block(std::size_t arm) {
  last_sub_block_ = SubBlock::SB3;
  ++block_counts_[arm];
  ++completed_blocks_;
  phase_ = Phase::BlockStart;
  if (initializing()) {
    block_arm_ = static_cast<std::size_t>(completed_blocks_);
    return;
  }
  for (std::size_t j = 0; j < num_arms(); ++j)
    indices_[j] = rca_index(sb2_rewards_[j], sb2_plays_[j], static_cast<double>(sb2_slots_),
                            exploration_);
  block_arm_ = argmax_lowest(indices_);
}

void RegenerativeCyclePolicy::learn(std::size_t arm, std::size_t state, double reward) {
  ++slots_;
  auto& gamma = regenerative_states_[arm];
  switch (phase_) {
    case Phase::BlockStart:
      if (!gamma) {
        gamma = state;
        accumulate_sb2(arm, reward);
        return;
      }
      [[fallthrough]];
    case Phase::SB1:
      if (state == *gamma) {
        accumulate_sb2(arm, reward);
      } else {
        last_sub_block_ = SubBlock::SB1;
        phase_ = Phase::SB1;
      }
      return;
    case Phase::SB2:
      if (state == *gamma)
        finish_block(arm);
      else
        accumulate_sb2(arm, reward);
      return;
  }
}

}  // namespace bandit_lab
