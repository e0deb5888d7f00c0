// Deterministic randomness. Every randomized algorithm takes an explicit
// Seed; identical seed and input give bit-identical output on every platform.
// std::mt19937_64 has a standard-specified sequence, and all derived draws
// below avoid the (implementation-defined) standard distributions.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace topagg {

struct Seed {
  std::uint64_t value = 0;
};

class DeterministicRng {
 public:
  explicit DeterministicRng(Seed seed) : engine_(seed.value) {}

  std::uint64_t next_u64() { return engine_(); }

  // 53-bit uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * kInv53;
  }

  // 53-bit uniform in (0, 1]; safe as a log argument.
  double uniform_open0() {
    return static_cast<double>((engine_() >> 11) + 1) * kInv53;
  }

  // Inverse-CDF exponential draw with the given rate.
  double exponential(double rate) {
    return -std::log(uniform_open0()) / rate;
  }

  // Unbiased integer in [0, bound) via rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t v = engine_();
      if (v >= threshold) return v % bound;
    }
  }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  std::mt19937_64 engine_;
};

}  // namespace topagg
