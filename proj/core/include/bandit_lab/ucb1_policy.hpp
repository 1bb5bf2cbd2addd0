#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bandit_lab/policy.hpp"

namespace bandit_lab {

// Any arm with zero plays is chosen first (lowest index); otherwise the
// argmax of mean + sqrt(L ln n / T_i), ties to the lowest index. `slot_count`
// is n, the number of slots played so far.
std::size_t ucb1_select(std::span<const std::uint64_t> plays, std::span<const double> totals,
                        std::uint64_t slot_count, double exploration);

// UCB1 with the exploration constant L in place of 2; indices are
// recomputed every slot from all observed rewards.
class Ucb1Policy final : public Policy {
 public:
  Ucb1Policy(std::size_t num_arms, double exploration);

  std::string label() const override { return "ucb1"; }
  double exploration() const noexcept { return exploration_; }
  std::uint64_t slots() const noexcept { return slots_; }
  const std::vector<std::uint64_t>& plays() const noexcept { return plays_; }
  const std::vector<double>& reward_totals() const noexcept { return totals_; }
  std::uint64_t index_evaluations() const noexcept { return index_evaluations_; }

 private:
  std::size_t choose() override;
  void learn(std::size_t arm, std::size_t state, double reward) override;

  double exploration_;
  std::uint64_t slots_ = 0;
  std::uint64_t index_evaluations_ = 0;
  std::vector<std::uint64_t> plays_;
  std::vector<double> totals_;
};

}  // namespace bandit_lab
