#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bandit_lab/error.hpp"
#include "bandit_lab/markov_chain.hpp"
#include "bandit_lab/random_stream.hpp"

namespace bandit_lab {

// Which stochastic matrix the eigenvalue gap is taken on. Symmetrized is the
// multiplicative symmetrization P' P; Raw is P itself, which is only defined
// here for reversible chains.
enum class GapConvention { Symmetrized, Raw };

const char* to_string(GapConvention convention) noexcept;

struct ArmState {
  std::size_t index = 0;
  friend bool operator==(ArmState, ArmState) = default;
};

// One arm: a validated chain, positive per-state rewards, and the analytics
// derived from them. Immutable once built, so instances may be shared across
// concurrent simulation runs.
class ArmModel {
 public:
  ArmModel(TransitionMatrix transition, std::vector<double> rewards,
           std::vector<std::string> labels = {});

  // Two-state Gilbert-Elliot channel: state 0 is "bad", state 1 is "good";
  // p01 is the bad->good probability and p10 the good->bad probability.
  static ArmModel gilbert_elliot(double p01, double p10, double bad_reward, double good_reward);

  std::size_t num_states() const noexcept { return transition_.size(); }
  const TransitionMatrix& transition() const noexcept { return transition_; }
  const std::vector<double>& rewards() const noexcept { return rewards_; }
  double reward(ArmState state) const { return rewards_.at(state.index); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Eigen::VectorXd& stationary() const noexcept { return stationary_; }
  double mean_reward() const noexcept { return mean_reward_; }
  double min_stationary() const noexcept { return stationary_.minCoeff(); }
  double max_reward() const;

  const Eigen::MatrixXd& hitting_times() const noexcept { return hitting_times_; }
  // max over x != y of M(x, y); 0 for a single-state arm.
  double max_hitting_time() const noexcept { return max_hitting_time_; }

  // Throws IrreducibilityViolated when P_hat is reducible. Simulation does
  // not need either quantity, so construction still succeeds in that case.
  const Eigen::MatrixXd& symmetrization() const;
  bool symmetrization_irreducible() const noexcept { return symmetrization_.has_value(); }

  // Throws IrreducibilityViolated (Symmetrized) or ComplexSpectrum (Raw).
  double eigenvalue_gap(GapConvention convention) const;

  ArmState step(ArmState state, RandomStream& rng) const;
  ArmState sample_stationary(RandomStream& rng) const;

 private:
  TransitionMatrix transition_;
  std::vector<double> rewards_;
  std::vector<std::string> labels_;
  Eigen::VectorXd stationary_;
  double mean_reward_ = 0.0;
  Eigen::MatrixXd hitting_times_;
  double max_hitting_time_ = 0.0;
  std::optional<Eigen::MatrixXd> symmetrization_;
  std::optional<double> symmetrized_gap_;
  std::optional<double> raw_gap_;
  // Row-wise cumulative sums in natural state order, for inverse-CDF steps.
  Eigen::MatrixXd cumulative_rows_;
  Eigen::VectorXd cumulative_stationary_;
};

// Inverse-CDF draw over `weights` in natural order using one uniform `u`.
// Falls back to the last positive-weight entry when rounding leaves the
// cumulative sum just below u.
template <typename Cumulative>
std::size_t inverse_cdf(const Cumulative& cumulative, double u) {
  const auto n = static_cast<std::size_t>(cumulative.size());
  for (std::size_t i = 0; i < n; ++i)
    if (u < cumulative[static_cast<Eigen::Index>(i)]) return i;
  for (std::size_t i = n; i-- > 0;) {
    const double below = i == 0 ? 0.0 : cumulative[static_cast<Eigen::Index>(i - 1)];
    if (cumulative[static_cast<Eigen::Index>(i)] > below) return i;
  }
  return n - 1;
}

}  // namespace bandit_lab
