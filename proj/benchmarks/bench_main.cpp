#include <benchmark/benchmark.h>

#include "bandit_lab/exp3_policy.hpp"
#include "bandit_lab/policy_spec.hpp"
#include "bandit_lab/regret_bounds.hpp"
#include "bandit_lab/scenario.hpp"
#include "bandit_lab/simulation.hpp"

namespace {

using namespace bandit_lab;

void BM_ArmStep(benchmark::State& state) {
  const auto arm = scenario_s1().arm(0);
  RandomStream rng(1);
  ArmState s{0};
  for (auto _ : state) {
    s = arm.step(s, rng);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ArmStep);

void BM_ArmAnalytics(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(n, n, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) p(i, (i + 1) % n) += static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) p.row(i) /= p.row(i).sum();
  const TransitionMatrix chain(p);
  for (auto _ : state) {
    ArmModel arm(chain, std::vector<double>(static_cast<std::size_t>(n), 1.0));
    benchmark::DoNotOptimize(arm.eigenvalue_gap(GapConvention::Symmetrized));
  }
}
BENCHMARK(BM_ArmAnalytics)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

void BM_BoundReport(benchmark::State& state) {
  const auto s = scenario_s1();
  for (auto _ : state) benchmark::DoNotOptimize(compute_bound_report(s, GapConvention::Raw));
}
BENCHMARK(BM_BoundReport);

void BM_Episode(benchmark::State& state, const char* name, double exploration) {
  const auto s = scenario_s2();
  auto spec = PolicySpec::parse(name);
  spec.exploration = exploration;
  const std::uint64_t horizon = 100000;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto policy = make_policy(spec, s, horizon, seed);
    benchmark::DoNotOptimize(run_episode(s, *policy, horizon, seed++));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(horizon));
}
BENCHMARK_CAPTURE(BM_Episode, rca, "rca", 1037.2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Episode, ucb1, "ucb1", 2.0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Episode, exp3, "exp3", 0.0)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto s = scenario_s2();
  auto spec = PolicySpec::parse("rca");
  spec.exploration = 1037.2;
  const MonteCarloConfig config{.horizon = 20000, .runs = 16, .master_seed = 1,
                                .threads = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(monte_carlo(
        s, [&](std::uint64_t seed) { return make_policy(spec, s, config.horizon, seed); },
        config));
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
