#pragma once

#include <cstdint>

namespace dualwave {

/// splitmix64 mixing step.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based stream: the state is derived from (seed, counter) alone,
/// so stream i can be generated on any worker in any order and always
/// yields the same draws.
class CounterRng {
public:
  CounterRng(std::uint64_t master_seed, std::uint64_t counter)
      : state_(mix64(mix64(master_seed) ^ (counter + 0xD1B54A32D192ED03ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

}  // namespace dualwave
