#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "bandit_lab/arm_model.hpp"
#include "bandit_lab/scenario.hpp"

namespace bandit_lab {

// sum_{t>=1} t^-2.
inline constexpr double kBeta = std::numbers::pi * std::numbers::pi / 6.0;

struct ArmBoundTerms {
  std::size_t num_states = 0;
  double mean = 0.0;
  double gap_to_best = 0.0;      // mu* - mu_i; 0 for the best arm
  double min_stationary = 0.0;   // pi^i_min
  double max_hitting_time = 0.0; // M^i_max
  double eigenvalue_gap = 0.0;   // epsilon^i under the report's convention
  double c = 0.0;                // 1 + (|S^i| + |S^*|) beta / pi_min
  double d = 0.0;                // 1 / pi^i_min + M^i_max + 1
  double e = 0.0;                // mu_i (1 + M^i_max) + mu* M^*_max
  bool optimal = false;
};

// Constants of the finite-time RCA regret bound for one scenario.
struct BoundReport {
  GapConvention convention = GapConvention::Symmetrized;
  double pi_min = 0.0;
  double r_max = 0.0;
  std::size_t s_max = 0;
  double pi_hat_max = 0.0;  // max over arms/states of max{pi_x, 1 - pi_x}
  double epsilon_min = 0.0;
  double beta = kBeta;
  std::size_t optimal_arm = 0;
  double optimal_mean = 0.0;
  std::vector<ArmBoundTerms> arms;
  double f = 0.0;            // mu* (1 / pi_min + max_i M^i_max + 1)
  double l_threshold = 0.0;  // 112 S_max^2 r_max^2 pi_hat_max^2 / epsilon_min

  bool below_threshold(double exploration) const noexcept { return exploration < l_threshold; }

  // Upper bound on the expected plays of one suboptimal arm after n slots:
  // D_i (4 L ln n / gap_i^2 + C_i). Returns 0 for the best arm.
  double play_count_bound(std::size_t arm, double exploration, std::uint64_t horizon) const;

  // sum over suboptimal i of 4 L D_i ln n / gap_i + gap_i D_i C_i.
  double theorem1(double exploration, std::uint64_t horizon) const;

  // 4 L ln n sum_i (D_i + E_i / gap_i) / gap_i + sum_i C_i (gap_i D_i + E_i) + F.
  double theorem2(double exploration, std::uint64_t horizon) const;
};

// Throws IrreducibilityViolated (symmetrized) or ComplexSpectrum (raw) with
// the offending arm attached.
BoundReport compute_bound_report(const Scenario& scenario,
                                 GapConvention convention = GapConvention::Symmetrized);

double l_threshold(const Scenario& scenario, GapConvention convention = GapConvention::Symmetrized);
double theorem1_bound(const Scenario& scenario, double exploration, std::uint64_t horizon,
                      GapConvention convention = GapConvention::Symmetrized);
double theorem2_bound(const Scenario& scenario, double exploration, std::uint64_t horizon,
                      GapConvention convention = GapConvention::Symmetrized);

}  // namespace bandit_lab
