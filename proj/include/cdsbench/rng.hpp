// Deterministic 64-bit random source shared by every sweep.
//
// The generator is part of the output contract: xoshiro256** seeded through
// splitmix64, uniform doubles built from the top 53 bits. Any port that
// follows this file regenerates identical coordinates.
#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace cdsbench {

/// splitmix64 step: advances `state` and returns the mixed output.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  constexpr double next_unit() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  constexpr double uniform(double lo, double hi) noexcept {
    return lo + next_unit() * (hi - lo);
  }

 private:
  std::array<std::uint64_t, 4> state_{};
};

/// Seed of instance `instance` at grid point (nodes, range):
/// h = sm(base); h = sm(h ^ nodes); h = sm(h ^ bits(range)); h = sm(h ^ instance)
/// where sm(x) is one splitmix64 output from state x.
constexpr std::uint64_t derive_instance_seed(std::uint64_t base_seed, std::uint64_t nodes,
                                             double range, std::uint64_t instance) noexcept {
  auto mix = [](std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix64(s);
  };
  std::uint64_t h = mix(base_seed);
  h = mix(h ^ nodes);
  h = mix(h ^ std::bit_cast<std::uint64_t>(range));
  h = mix(h ^ instance);
  return h;
}

}  // namespace cdsbench
