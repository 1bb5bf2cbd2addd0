#pragma once

#include <cstdint>
#include <random>

namespace bandit_lab {

// SplitMix64 finalizer; used to derive independent seeds from a master seed.
std::uint64_t mix64(std::uint64_t value) noexcept;

// Counter-based seed derivation: the seed for stream `index` depends only on
// (master, index), never on the order in which streams are created.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept;

// Seeds for the two streams of one simulation run. Arm transitions and
// policy randomization never share a stream, so arm sample paths do not
// depend on which policy is being run.
struct RunSeeds {
  std::uint64_t arms;
  std::uint64_t policy;
};

RunSeeds derive_run_seeds(std::uint64_t run_seed) noexcept;

// Deterministic uniform source. `uniform()` maps the top 53 bits of one
// mt19937_64 output onto [0, 1), which is bit-identical across standard
// libraries (std::uniform_real_distribution is not).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace bandit_lab
