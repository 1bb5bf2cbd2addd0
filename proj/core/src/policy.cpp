#include "bandit_lab/policy.hpp"

#include "bandit_lab/error.hpp"
#include "bandit_lab/scenario.hpp"

namespace bandit_lab {

Policy::Policy(std::size_t num_arms) : num_arms_(num_arms) {
  if (num_arms_ == 0) throw Error(ErrorCode::InvalidArgument, "policy needs at least one arm");
}

std::size_t Policy::select_arm() {
  if (pending_)
    throw Error(ErrorCode::ProtocolViolation, "select_arm called twice without observe");
  const std::size_t arm = choose();
  pending_ = arm;
  return arm;
}

void Policy::observe(std::size_t arm, std::size_t state, double reward) {
  if (!pending_)
    throw Error(ErrorCode::ProtocolViolation, "observe called without a pending select_arm");
  if (*pending_ != arm)
    throw Error(ErrorCode::ProtocolViolation,
                "observation for arm " + std::to_string(arm + 1) + " but arm " +
                    std::to_string(*pending_ + 1) + " was selected");
  pending_.reset();
  learn(arm, state, reward);
}

std::size_t best_fixed_arm(const Scenario& scenario) {
  const auto means = scenario.mean_rewards();
  return unique_argmax(means);
}

}  // namespace bandit_lab
