#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandit_lab/policy.hpp"

namespace bandit_lab {

// g = r_total / T2 + sqrt(L ln(t2) / T2). Requires T2 >= 1, t2 >= 1; t2 is
// the shared SB2 clock.
double rca_index(double reward_total, std::uint64_t sb2_plays, double sb2_clock,
                 double exploration);

// Sub-block of a single observation inside an RCA block: SB1 precedes the
// first visit to the arm's regenerative state, SB2 runs from that visit up
// to (excluding) the next one, and SB3 is the block-ending revisit.
enum class SubBlock { SB1, SB2, SB3 };

// Regenerative cycle algorithm. Plays whole blocks on one arm; only the
// observations inside SB2 (complete regenerative cycles) feed the index.
//
// The first K blocks play arms 1..K in order. In those blocks the arm's
// first observed state becomes its regenerative state and that same slot
// opens SB2, so an initialization block never has an SB1. After each block
// every arm's index is recomputed with the shared SB2 clock t2 and the next
// block plays the argmax (lowest index on ties).
class RegenerativeCyclePolicy final : public Policy {
 public:
  RegenerativeCyclePolicy(std::size_t num_arms, double exploration);

  std::string label() const override { return "rca"; }
  double exploration() const noexcept { return exploration_; }

  bool initializing() const noexcept { return completed_blocks_ < num_arms(); }
  std::size_t block_arm() const noexcept { return block_arm_; }

  std::uint64_t slots() const noexcept { return slots_; }
  std::uint64_t sb2_slots() const noexcept { return sb2_slots_; }
  std::uint64_t completed_blocks() const noexcept { return completed_blocks_; }
  const std::vector<std::uint64_t>& sb2_plays() const noexcept { return sb2_plays_; }
  const std::vector<std::uint64_t>& block_counts() const noexcept { return block_counts_; }
  const std::vector<double>& sb2_rewards() const noexcept { return sb2_rewards_; }
  // Indices from the last block boundary; NaN until initialization finishes.
  const std::vector<double>& indices() const noexcept { return indices_; }
  const std::vector<std::optional<std::size_t>>& regenerative_states() const noexcept {
    return regenerative_states_;
  }
  std::optional<SubBlock> last_sub_block() const noexcept { return last_sub_block_; }

 private:
  enum class Phase { BlockStart, SB1, SB2 };

  std::size_t choose() override { return block_arm_; }
  void learn(std::size_t arm, std::size_t state, double reward) override;
  void accumulate_sb2(std::size_t arm, double reward);
  void finish_block(std::size_t arm);

  double exploration_;
  Phase phase_ = Phase::BlockStart;
  std::size_t block_arm_ = 0;
  std::uint64_t slots_ = 0;
  std::uint64_t sb2_slots_ = 0;
  std::uint64_t completed_blocks_ = 0;
  std::vector<std::uint64_t> sb2_plays_;
  std::vector<std::uint64_t> block_counts_;
  std::vector<double> sb2_rewards_;
  std::vector<double> indices_;
  std::vector<std::optional<std::size_t>> regenerative_states_;
  std::optional<SubBlock> last_sub_block_;
};

}  // namespace bandit_lab
