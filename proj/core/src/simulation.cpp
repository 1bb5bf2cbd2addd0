#include "bandit_lab/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "bandit_lab/error.hpp"
#include "bandit_lab/random_stream.hpp"

namespace bandit_lab {

std::vector<std::uint64_t> checkpoint_times(std::uint64_t horizon, std::uint64_t stride) {
  if (stride == 0) throw Error(ErrorCode::InvalidArgument, "checkpoint stride must be positive");
  std::vector<std::uint64_t> times;
  for (std::uint64_t t = stride; t <= horizon; t += stride) times.push_back(t);
  if (times.empty() || times.back() != horizon) times.push_back(horizon);
  return times;
}

RegretTrace run_episode(const Scenario& scenario, Policy& policy, std::uint64_t horizon,
                        std::uint64_t seed, const EpisodeOptions& options) {
  if (horizon == 0) throw Error(ErrorCode::InvalidArgument, "horizon must be at least 1");
  if (policy.num_arms() != scenario.num_arms())
    throw Error(ErrorCode::InvalidArgument, "policy and scenario disagree on the number of arms");

  const auto& arms = scenario.arms();
  const std::size_t k = arms.size();
  RandomStream rng(derive_run_seeds(seed).arms);

  std::vector<ArmState> states(k);
  if (options.initial_states) {
    if (options.initial_states->size() != k)
      throw Error(ErrorCode::InvalidArgument, "need one initial state per arm");
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t s = (*options.initial_states)[i];
      if (s >= arms[i].num_states())
        throw Error(ErrorCode::InvalidArgument, "initial state out of range", i);
      states[i] = ArmState{s};
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) states[i] = arms[i].sample_stationary(rng);
  }

  RegretTrace trace;
  trace.run_seed = seed;
  trace.policy = policy.label();
  trace.plays.assign(k, 0);
  const auto times = checkpoint_times(horizon, options.stride);
  trace.checkpoints.reserve(times.size());
  auto next_checkpoint = times.begin();

  const double best_mean = scenario.optimal_mean();
  double cumulative = 0.0;
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    const std::size_t chosen = policy.select_arm();
    if (chosen >= k) throw Error(ErrorCode::ProtocolViolation, "policy selected a missing arm");
    for (std::size_t i = 0; i < k; ++i) states[i] = arms[i].step(states[i], rng);
    const double reward = arms[chosen].reward(states[chosen]);
    cumulative += reward;
    ++trace.plays[chosen];
    policy.observe(chosen, states[chosen].index, reward);
    if (options.on_slot) options.on_slot(t, chosen, states);
    if (t == *next_checkpoint) {
      trace.checkpoints.push_back(
          Checkpoint{t, cumulative, static_cast<double>(t) * best_mean - cumulative});
      ++next_checkpoint;
    }
  }
  return trace;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("BANDIT_LAB_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MonteCarloResult monte_carlo(const Scenario& scenario, const PolicyFactory& factory,
                             const MonteCarloConfig& config) {
  if (config.runs == 0) throw Error(ErrorCode::InvalidArgument, "runs must be at least 1");

  std::vector<std::size_t> order(config.runs);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (config.execution_order) {
    std::vector<std::size_t> sorted = *config.execution_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != order)
      throw Error(ErrorCode::InvalidArgument, "execution order must be a permutation of the runs");
    order = *config.execution_order;
  }

  EpisodeOptions episode;
  episode.stride = config.stride;
  episode.initial_states = config.initial_states;

  std::vector<RegretTrace> traces(config.runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= order.size()) return;
      const std::size_t run = order[slot];
      try {
        const std::uint64_t run_seed = split_seed(config.master_seed, run);
        auto policy = factory(derive_run_seeds(run_seed).policy);
        traces[run] = run_episode(scenario, *policy, config.horizon, run_seed, episode);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(order.size());
        return;
      }
    }
  };

  const std::size_t threads =
      std::min(config.runs, config.threads == 0 ? default_thread_count() : config.threads);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  MonteCarloResult result;
  result.runs = config.runs;
  result.policy = traces.front().policy;
  result.config = config;
  result.config.execution_order.reset();

  const std::size_t points = traces.front().checkpoints.size();
  const double runs = static_cast<double>(config.runs);
  result.t.resize(points);
  result.mean_regret.assign(points, 0.0);
  result.sd_regret.assign(points, 0.0);
  result.mean_cumulative_reward.assign(points, 0.0);
  for (std::size_t c = 0; c < points; ++c) {
    result.t[c] = traces.front().checkpoints[c].t;
    double regret_sum = 0.0;
    double reward_sum = 0.0;
    for (const auto& trace : traces) {
      regret_sum += trace.checkpoints[c].regret;
      reward_sum += trace.checkpoints[c].cumulative_reward;
    }
    const double mean = regret_sum / runs;
    result.mean_regret[c] = mean;
    result.mean_cumulative_reward[c] = reward_sum / runs;
    if (config.runs > 1) {
      double squares = 0.0;
      for (const auto& trace : traces) {
        const double d = trace.checkpoints[c].regret - mean;
        squares += d * d;
      }
      result.sd_regret[c] = std::sqrt(squares / (runs - 1.0));
    }
  }

  const std::size_t k = scenario.num_arms();
  result.mean_plays.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t total = 0;
    for (const auto& trace : traces) total += trace.plays[i];
    result.mean_plays[i] = static_cast<double>(total) / runs;
  }
  return result;
}

}  // namespace bandit_lab
