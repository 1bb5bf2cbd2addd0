#include "bandit_lab/random_stream.hpp"

namespace bandit_lab {

std::uint64_t mix64(std::uint64_t value) noexcept {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

RunSeeds derive_run_seeds(std::uint64_t run_seed) noexcept {
  return RunSeeds{split_seed(run_seed, 0), split_seed(run_seed, 1)};
}

}  // namespace bandit_lab
