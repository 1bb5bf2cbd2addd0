#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bandit_lab/error.hpp"
#include "bandit_lab/policy_spec.hpp"
#include "bandit_lab/regret_bounds.hpp"
#include "bandit_lab/report.hpp"
#include "bandit_lab/scenario_io.hpp"
#include "bandit_lab/simulation.hpp"

namespace bandit_lab::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimulateArgs {
  std::string scenario;
  std::string policy;
  std::optional<double> exploration;
  std::optional<std::string> mix;
  std::uint64_t horizon = 100000;
  std::size_t runs = 100;
  std::uint64_t seed = 1;
  std::uint64_t stride = kDefaultStride;
  std::string out;
  std::string svg;
  bool svg_log_x = false;
  std::string initial_states;
};

struct BoundsArgs {
  std::string scenario;
  std::string convention = "symmetrized";
  std::optional<double> exploration;
  std::optional<std::uint64_t> horizon;
};

struct ScenariosArgs {
  std::string scenario;
};

std::vector<std::size_t> parse_state_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || end != item.data() + item.size())
      throw UsageError("--initial-states expects comma-separated state indices");
    out.push_back(value);
  }
  return out;
}

double parse_mix(const std::string& text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw UsageError("--a expects a number in (0, 1] or 'auto'");
  return value;
}

GapConvention parse_convention(const std::string& text) {
  if (text == "symmetrized") return GapConvention::Symmetrized;
  if (text == "raw") return GapConvention::Raw;
  throw UsageError("--convention must be 'symmetrized' or 'raw'");
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << content;
  file.flush();
  return static_cast<bool>(file);
}

int simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  PolicySpec spec = PolicySpec::parse(args.policy);
  const bool uses_exploration = spec.kind == PolicyKind::Rca || spec.kind == PolicyKind::Ucb1;
  if (uses_exploration && !args.exploration)
    throw UsageError("--L is required for policy " + spec.name());
  if (!uses_exploration && args.exploration)
    throw UsageError("--L only applies to rca and ucb1");
  if (spec.kind != PolicyKind::Exp3 && args.mix) throw UsageError("--a only applies to exp3");
  if (args.horizon == 0) throw UsageError("--horizon must be at least 1");
  if (args.runs == 0) throw UsageError("--runs must be at least 1");
  if (args.stride == 0) throw UsageError("--stride must be at least 1");
  if (uses_exploration) spec.exploration = *args.exploration;
  if (spec.kind == PolicyKind::Exp3 && args.mix && *args.mix != "auto")
    spec.mix = parse_mix(*args.mix);

  const Scenario scenario = resolve_scenario(args.scenario);
  if (spec.kind == PolicyKind::Fixed && spec.fixed_arm >= scenario.num_arms())
    throw UsageError("fixed arm is out of range for scenario " + scenario.name());

  MonteCarloConfig config;
  config.horizon = args.horizon;
  config.runs = args.runs;
  config.master_seed = args.seed;
  config.stride = args.stride;
  if (!args.initial_states.empty()) config.initial_states = parse_state_list(args.initial_states);

  RunManifest manifest;
  manifest.add("tool", "bandit_lab");
  manifest.add("version", tool_version());
  manifest.add("scenario", scenario.name());
  manifest.add("scenario_hash", scenario_hash(scenario));
  manifest.add("arms", std::to_string(scenario.num_arms()));
  manifest.add("policy", spec.name());
  if (uses_exploration) manifest.add("L", format_number(spec.exploration));
  if (spec.kind == PolicyKind::Exp3) {
    const double a = resolved_mix(spec, scenario.num_arms(), args.horizon);
    manifest.add("a", format_number(a));
    manifest.add("a_source", spec.mix ? "explicit" : "auto");
    spec.mix = a;
  }
  manifest.add("horizon", std::to_string(config.horizon));
  manifest.add("runs", std::to_string(config.runs));
  manifest.add("master_seed", std::to_string(config.master_seed));
  manifest.add("stride", std::to_string(config.stride));
  manifest.add("initial_states",
               args.initial_states.empty() ? std::string("stationary") : args.initial_states);

  if (spec.kind == PolicyKind::Rca) {
    try {
      const BoundReport report = compute_bound_report(scenario);
      if (report.below_threshold(spec.exploration))
        err << "warning: L = " << format_number(spec.exploration)
            << " is below the logarithmic-regret threshold "
            << format_number(report.l_threshold) << " (symmetrized convention)\n";
    } catch (const Error&) {
      // Threshold undefined for this scenario; simulation is still valid.
    }
  }

  const MonteCarloResult result = monte_carlo(
      scenario,
      [&](std::uint64_t policy_seed) {
        return make_policy(spec, scenario, config.horizon, policy_seed);
      },
      config);

  std::ostringstream csv;
  write_regret_csv(csv, manifest, result);
  if (args.out.empty()) {
    out << csv.str();
    if (!out) return 1;
  } else if (!write_file(args.out, csv.str())) {
    err << "error: cannot write " << args.out << '\n';
    return 1;
  }

  if (!args.svg.empty()) {
    std::ostringstream svg;
    SvgOptions options;
    options.log_x = args.svg_log_x;
    options.title = scenario.name() + " " + spec.name();
    write_regret_svg(svg, result, options);
    if (!write_file(args.svg, svg.str())) {
      err << "error: cannot write " << args.svg << '\n';
      return 1;
    }
  }
  return 0;
}

int bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
  const GapConvention convention = parse_convention(args.convention);
  if (args.exploration.has_value() != args.horizon.has_value())
    throw UsageError("--L and --n must be given together");
  if (args.horizon && *args.horizon == 0) throw UsageError("--n must be at least 1");
  const Scenario scenario = resolve_scenario(args.scenario);
  const BoundReport report = compute_bound_report(scenario, convention);

  out << "scenario=" << scenario.name() << '\n';
  out << "arms=" << scenario.num_arms() << '\n';
  out << "convention=" << to_string(convention) << '\n';
  out << "optimal_arm=" << report.optimal_arm + 1 << '\n';
  out << "mu_star=" << format_number(report.optimal_mean) << '\n';
  out << "beta=" << format_number(report.beta) << '\n';
  out << "pi_min=" << format_number(report.pi_min) << '\n';
  out << "r_max=" << format_number(report.r_max) << '\n';
  out << "S_max=" << report.s_max << '\n';
  out << "pi_hat_max=" << format_number(report.pi_hat_max) << '\n';
  out << "epsilon_min=" << format_number(report.epsilon_min) << '\n';
  out << "F=" << format_number(report.f) << '\n';
  out << "L_threshold=" << format_number(report.l_threshold) << '\n';
  out << "arm,states,mu,gap,pi_min,M_max,epsilon,C,D,E\n";
  for (std::size_t i = 0; i < report.arms.size(); ++i) {
    const ArmBoundTerms& a = report.arms[i];
    out << i + 1 << ',' << a.num_states << ',' << format_number(a.mean) << ','
        << format_number(a.gap_to_best) << ',' << format_number(a.min_stationary) << ','
        << format_number(a.max_hitting_time) << ',' << format_number(a.eigenvalue_gap) << ','
        << format_number(a.c) << ',' << format_number(a.d) << ',' << format_number(a.e) << '\n';
  }
  if (args.exploration) {
    const double l = *args.exploration;
    const std::uint64_t n = *args.horizon;
    if (report.below_threshold(l))
      err << "warning: L = " << format_number(l) << " is below L_threshold = "
          << format_number(report.l_threshold) << "; the bound assumes L >= L_threshold\n";
    out << "L=" << format_number(l) << '\n';
    out << "n=" << n << '\n';
    out << "theorem1_bound=" << format_number(report.theorem1(l, n)) << '\n';
    out << "theorem2_bound=" << format_number(report.theorem2(l, n)) << '\n';
    for (std::size_t i = 0; i < report.arms.size(); ++i)
      if (!report.arms[i].optimal)
        out << "play_bound_" << i + 1 << '=' << format_number(report.play_count_bound(i, l, n))
            << '\n';
  }
  return 0;
}

void list_scenario(const Scenario& scenario, std::ostream& out) {
  out << scenario.name() << ": " << scenario.num_arms() << " arms, optimal arm "
      << scenario.optimal_arm() + 1 << " (mu* = " << format_number(scenario.optimal_mean())
      << ")\n";
  out << "  arm,states,p01,p10,r0,r1,pi1,mu\n";
  for (std::size_t i = 0; i < scenario.num_arms(); ++i) {
    const ArmModel& arm = scenario.arm(i);
    out << "  " << i + 1 << ',' << arm.num_states() << ',';
    if (arm.num_states() == 2) {
      const auto& p = arm.transition();
      out << format_number(p(0, 1)) << ',' << format_number(p(1, 0)) << ','
          << format_number(arm.rewards()[0]) << ',' << format_number(arm.rewards()[1]) << ','
          << format_number(arm.stationary()(1)) << ',';
    } else {
      out << ",,,,,";
    }
    out << format_number(arm.mean_reward()) << '\n';
  }
}

int scenarios(const ScenariosArgs& args, std::ostream& out) {
  if (!args.scenario.empty()) {
    list_scenario(resolve_scenario(args.scenario), out);
    return 0;
  }
  for (const Scenario& s : builtin_scenarios()) list_scenario(s, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restless multi-armed bandit experiments on Markov-chain arms", "bandit_lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  SimulateArgs sim;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo regret curves for one policy on one scenario");
  simulate_cmd->add_option("--scenario", sim.scenario, "S1, S2, or a scenario JSON file")
      ->required();
  simulate_cmd->add_option("--policy", sim.policy, "rca|ucb1|exp3|oracle|fixed:<i>|random")
      ->required();
  simulate_cmd->add_option("--L", sim.exploration, "exploration constant (rca, ucb1)");
  simulate_cmd->add_option("--a", sim.mix, "Exp3 mixing parameter, or 'auto' (default)");
  simulate_cmd->add_option("--horizon", sim.horizon, "slots per run")->capture_default_str();
  simulate_cmd->add_option("--runs", sim.runs, "independent runs")->capture_default_str();
  simulate_cmd->add_option("--seed", sim.seed, "master seed")->capture_default_str();
  simulate_cmd->add_option("--stride", sim.stride, "checkpoint spacing in slots")
      ->capture_default_str();
  simulate_cmd->add_option("--out", sim.out, "CSV output path (default: stdout)");
  simulate_cmd->add_option("--svg", sim.svg, "optional SVG chart of mean regret");
  simulate_cmd->add_flag("--svg-logx", sim.svg_log_x, "logarithmic t axis in the SVG");
  simulate_cmd->add_option("--initial-states", sim.initial_states,
                           "comma-separated fixed initial state per arm (debugging)");

  BoundsArgs bnd;
  auto* bounds_cmd = app.add_subcommand("bounds", "Regret-bound constants for a scenario");
  bounds_cmd->add_option("--scenario", bnd.scenario, "S1, S2, or a scenario JSON file")
      ->required();
  bounds_cmd->add_option("--convention", bnd.convention, "symmetrized|raw")
      ->capture_default_str();
  bounds_cmd->add_option("--L", bnd.exploration, "exploration constant to evaluate");
  bounds_cmd->add_option("--n", bnd.horizon, "horizon to evaluate");

  ScenariosArgs scn;
  auto* scenarios_cmd = app.add_subcommand("scenarios", "List built-in or file scenarios");
  scenarios_cmd->add_option("--scenario", scn.scenario, "list only this scenario or file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == simulate_cmd) return simulate(sim, out, err);
    if (active == bounds_cmd) return bounds(bnd, out, err);
    return scenarios(scn, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() != ErrorCode::InvalidArgument) return 1;
    err << '\n' << active->help();
    return 2;
  }
}

}  // namespace bandit_lab::cli
