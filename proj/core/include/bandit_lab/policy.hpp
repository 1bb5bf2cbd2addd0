#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace bandit_lab {

class Scenario;

// Sequential decision contract shared by every learner. Each slot the
// harness calls select_arm() and then observe() for that same arm; anything
// else throws ProtocolViolation. Policies only ever see the probed arm's
// state and reward.
class Policy {
 public:
  virtual ~Policy() = default;
  Policy(const Policy&) = delete;
  Policy& operator=(const Policy&) = delete;

  std::size_t select_arm();
  void observe(std::size_t arm, std::size_t state, double reward);

  std::size_t num_arms() const noexcept { return num_arms_; }
  virtual std::string label() const = 0;

 protected:
  explicit Policy(std::size_t num_arms);

 private:
  virtual std::size_t choose() = 0;
  virtual void learn(std::size_t arm, std::size_t state, double reward) = 0;

  std::size_t num_arms_;
  std::optional<std::size_t> pending_;
};

// Argmax with ties broken toward the lowest index.
template <typename Range>
std::size_t argmax_lowest(const Range& values) {
  std::size_t best = 0;
  std::size_t i = 0;
  for (const auto& v : values) {
    if (v > values[best]) best = i;
    ++i;
  }
  return best;
}

// Arm with the highest stationary mean reward; the regret reference.
// Throws AmbiguousOptimum if the maximum is not unique.
std::size_t best_fixed_arm(const Scenario& scenario);

}  // namespace bandit_lab
