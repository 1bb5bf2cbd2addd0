#include "bandit_lab/arm_model.hpp"

#include <algorithm>
#include <cmath>

namespace bandit_lab {

const char* to_string(GapConvention convention) noexcept {
  return convention == GapConvention::Raw ? "raw" : "symmetrized";
}

ArmModel::ArmModel(TransitionMatrix transition, std::vector<double> rewards,
                   std::vector<std::string> labels)
    : transition_(std::move(transition)), rewards_(std::move(rewards)), labels_(std::move(labels)) {
  const std::size_t n = transition_.size();
  if (rewards_.size() != n)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " rewards, got " +
                                                std::to_string(rewards_.size()));
  for (std::size_t x = 0; x < n; ++x)
    if (!std::isfinite(rewards_[x]) || rewards_[x] <= 0.0)
      throw Error(ErrorCode::InvalidArgument,
                  "reward of state " + std::to_string(x) + " must be positive and finite");
  if (!labels_.empty() && labels_.size() != n)
    throw Error(ErrorCode::InvalidArgument, "state label count does not match state count");

  stationary_ = stationary_distribution(transition_);
  mean_reward_ = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    mean_reward_ += rewards_[x] * stationary_(static_cast<Eigen::Index>(x));

  hitting_times_ = mean_hitting_times(transition_);
  max_hitting_time_ = hitting_times_.maxCoeff();

  try {
    symmetrization_ = multiplicative_symmetrization(transition_, stationary_);
    symmetrized_gap_ = bandit_lab::eigenvalue_gap(*symmetrization_, stationary_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IrreducibilityViolated) throw;
  }
  try {
    raw_gap_ = bandit_lab::eigenvalue_gap(transition_.matrix(), stationary_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ComplexSpectrum) throw;
  }

  const auto size = static_cast<Eigen::Index>(n);
  cumulative_rows_.resize(size, size);
  cumulative_stationary_.resize(size);
  for (Eigen::Index x = 0; x < size; ++x) {
    double running = 0.0;
    for (Eigen::Index y = 0; y < size; ++y) {
      running += transition_.matrix()(x, y);
      cumulative_rows_(x, y) = running;
    }
  }
  double running = 0.0;
  for (Eigen::Index x = 0; x < size; ++x) {
    running += stationary_(x);
    cumulative_stationary_(x) = running;
  }
}

ArmModel ArmModel::gilbert_elliot(double p01, double p10, double bad_reward, double good_reward) {
  Eigen::MatrixXd p(2, 2);
  p << 1.0 - p01, p01, p10, 1.0 - p10;
  return ArmModel(TransitionMatrix(std::move(p)), {bad_reward, good_reward}, {"bad", "good"});
}

double ArmModel::max_reward() const {
  return *std::max_element(rewards_.begin(), rewards_.end());
}

const Eigen::MatrixXd& ArmModel::symmetrization() const {
  if (!symmetrization_)
    throw Error(ErrorCode::IrreducibilityViolated, "multiplicative symmetrization is reducible");
  return *symmetrization_;
}

double ArmModel::eigenvalue_gap(GapConvention convention) const {
  if (convention == GapConvention::Symmetrized) {
    if (!symmetrized_gap_)
      throw Error(ErrorCode::IrreducibilityViolated, "multiplicative symmetrization is reducible");
    return *symmetrized_gap_;
  }
  if (!raw_gap_)
    throw Error(ErrorCode::ComplexSpectrum,
                "chain is not reversible; the raw eigenvalue gap is undefined");
  return *raw_gap_;
}

ArmState ArmModel::step(ArmState state, RandomStream& rng) const {
  const double u = rng.uniform();
  return ArmState{inverse_cdf(cumulative_rows_.row(static_cast<Eigen::Index>(state.index)), u)};
}

ArmState ArmModel::sample_stationary(RandomStream& rng) const {
  return ArmState{inverse_cdf(cumulative_stationary_, rng.uniform())};
}

}  // namespace bandit_lab
