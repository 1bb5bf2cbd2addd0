#include "bandit_lab/regret_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bandit_lab/error.hpp"

namespace bandit_lab {

BoundReport compute_bound_report(const Scenario& scenario, GapConvention convention) {
  BoundReport report;
  report.convention = convention;
  report.optimal_arm = scenario.optimal_arm();
  report.optimal_mean = scenario.optimal_mean();
  report.pi_min = std::numeric_limits<double>::infinity();
  report.epsilon_min = std::numeric_limits<double>::infinity();

  double max_hitting_overall = 0.0;
  for (std::size_t i = 0; i < scenario.num_arms(); ++i) {
    const ArmModel& arm = scenario.arm(i);
    double gap = 0.0;
    try {
      gap = arm.eigenvalue_gap(convention);
    } catch (const Error& e) {
      throw e.with_arm(i);
    }
    report.pi_min = std::min(report.pi_min, arm.min_stationary());
    report.r_max = std::max(report.r_max, arm.max_reward());
    report.s_max = std::max(report.s_max, arm.num_states());
    for (Eigen::Index x = 0; x < arm.stationary().size(); ++x) {
      const double p = arm.stationary()(x);
      report.pi_hat_max = std::max({report.pi_hat_max, p, 1.0 - p});
    }
    report.epsilon_min = std::min(report.epsilon_min, gap);
    max_hitting_overall = std::max(max_hitting_overall, arm.max_hitting_time());

    ArmBoundTerms terms;
    terms.num_states = arm.num_states();
    terms.mean = arm.mean_reward();
    terms.gap_to_best = i == report.optimal_arm ? 0.0 : report.optimal_mean - terms.mean;
    terms.min_stationary = arm.min_stationary();
    terms.max_hitting_time = arm.max_hitting_time();
    terms.eigenvalue_gap = gap;
    terms.optimal = i == report.optimal_arm;
    report.arms.push_back(terms);
  }

  const ArmModel& best = scenario.arm(report.optimal_arm);
  const double best_states = static_cast<double>(best.num_states());
  const double best_hitting = best.max_hitting_time();
  for (auto& terms : report.arms) {
    terms.c = 1.0 + (static_cast<double>(terms.num_states) + best_states) * report.beta /
                        report.pi_min;
    terms.d = 1.0 / terms.min_stationary + terms.max_hitting_time + 1.0;
    terms.e = terms.mean * (1.0 + terms.max_hitting_time) + report.optimal_mean * best_hitting;
  }
  report.f = report.optimal_mean * (1.0 / report.pi_min + max_hitting_overall + 1.0);

  const double s = static_cast<double>(report.s_max);
  report.l_threshold = 112.0 * s * s * report.r_max * report.r_max * report.pi_hat_max *
                       report.pi_hat_max / report.epsilon_min;
  return report;
}

double BoundReport::play_count_bound(std::size_t arm, double exploration,
                                     std::uint64_t horizon) const {
  const ArmBoundTerms& terms = arms.at(arm);
  if (terms.optimal) return 0.0;
  const double log_n = std::log(static_cast<double>(horizon));
  return terms.d * (4.0 * exploration * log_n / (terms.gap_to_best * terms.gap_to_best) + terms.c);
}

double BoundReport::theorem1(double exploration, std::uint64_t horizon) const {
  const double log_n = std::log(static_cast<double>(horizon));
  double total = 0.0;
  for (const auto& terms : arms) {
    if (terms.optimal) continue;
    const double gap = terms.gap_to_best;
    total += 4.0 * exploration * terms.d * log_n / gap + gap * terms.d * terms.c;
  }
  return total;
}

double BoundReport::theorem2(double exploration, std::uint64_t horizon) const {
  const double log_n = std::log(static_cast<double>(horizon));
  double logarithmic = 0.0;
  double constant = 0.0;
  for (const auto& terms : arms) {
    if (terms.optimal) continue;
    const double gap = terms.gap_to_best;
    logarithmic += (terms.d + terms.e / gap) / gap;
    constant += terms.c * (gap * terms.d + terms.e);
  }
  return 4.0 * exploration * log_n * logarithmic + constant + f;
}

double l_threshold(const Scenario& scenario, GapConvention convention) {
  return compute_bound_report(scenario, convention).l_threshold;
}

double theorem1_bound(const Scenario& scenario, double exploration, std::uint64_t horizon,
                      GapConvention convention) {
  return compute_bound_report(scenario, convention).theorem1(exploration, horizon);
}

double theorem2_bound(const Scenario& scenario, double exploration, std::uint64_t horizon,
                      GapConvention convention) {
  return compute_bound_report(scenario, convention).theorem2(exploration, horizon);
}

}  // namespace bandit_lab
