#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bandit_lab/arm_model.hpp"
#include "bandit_lab/policy.hpp"
#include "bandit_lab/scenario.hpp"

namespace bandit_lab {

inline constexpr std::uint64_t kDefaultStride = 100;

struct Checkpoint {
  std::uint64_t t = 0;
  double cumulative_reward = 0.0;
  double regret = 0.0;  // t * mu* - cumulative_reward, exactly as stored
};

struct RegretTrace {
  std::vector<Checkpoint> checkpoints;
  std::vector<std::uint64_t> plays;  // per-arm play counts at the horizon
  std::uint64_t run_seed = 0;
  std::string policy;
};

// Per-slot hook: slot number (1-based), probed arm, and every arm's state
// after this slot's transition.
using SlotObserver = std::function<void(std::uint64_t, std::size_t, std::span<const ArmState>)>;

struct EpisodeOptions {
  std::uint64_t stride = kDefaultStride;
  // Overrides the stationary initial draw (one state per arm).
  std::optional<std::vector<std::size_t>> initial_states;
  SlotObserver on_slot;
};

// Multiples of stride up to horizon, plus horizon itself.
std::vector<std::uint64_t> checkpoint_times(std::uint64_t horizon, std::uint64_t stride);

// One restless episode. Arms start from their stationary distributions (one
// variate each, arm order). Each slot the policy selects an arm, every arm
// steps once (arm order, one variate each), and the policy observes the
// selected arm's new state and its reward. Arm randomness comes from
// derive_run_seeds(seed).arms only.
RegretTrace run_episode(const Scenario& scenario, Policy& policy, std::uint64_t horizon,
                        std::uint64_t seed, const EpisodeOptions& options = {});

// Builds a fresh policy for a run from that run's policy-stream seed.
using PolicyFactory = std::function<std::unique_ptr<Policy>(std::uint64_t policy_seed)>;

struct MonteCarloConfig {
  std::uint64_t horizon = 100000;
  std::size_t runs = 100;
  std::uint64_t master_seed = 0;
  std::uint64_t stride = kDefaultStride;
  // 0 picks default_thread_count().
  std::size_t threads = 0;
  std::optional<std::vector<std::size_t>> initial_states;
  // Order in which runs are dispatched; must be a permutation of 0..runs-1
  // when set. Results do not depend on it.
  std::optional<std::vector<std::size_t>> execution_order;
};

struct MonteCarloResult {
  std::vector<std::uint64_t> t;
  std::vector<double> mean_regret;
  std::vector<double> sd_regret;  // sample SD across runs; 0 for a single run
  std::vector<double> mean_cumulative_reward;
  std::vector<double> mean_plays;  // per arm, at the horizon
  std::size_t runs = 0;
  std::string policy;
  MonteCarloConfig config;
};

// seed for run j is split_seed(master_seed, j). Runs execute on a worker
// pool and are reduced in run order, so the result is independent of thread
// count and scheduling.
MonteCarloResult monte_carlo(const Scenario& scenario, const PolicyFactory& factory,
                             const MonteCarloConfig& config);

// BANDIT_LAB_THREADS if set to a positive integer, else hardware concurrency.
std::size_t default_thread_count();

}  // namespace bandit_lab
