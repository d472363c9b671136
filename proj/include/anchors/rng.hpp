#pragma once

#include <cstdint>

namespace anchors::rng {

// SplitMix64 finalizer. Bijective on 64-bit words, strong avalanche.
inline std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Keyed combination: derive an independent stream key from (a, b).
inline std::uint64_t derive(std::uint64_t a, std::uint64_t b) {
  return mix(a ^ (0xd1b54a32d192ed03ULL * (b + 1)));
}

inline std::uint64_t derive(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return derive(derive(a, b), c);
}

// Fair coin keyed by an already mixed word.
inline bool coin(std::uint64_t mixed_key) {
  return (mixed_key >> 63) != 0;
}

inline double to_unit(std::uint64_t w) {
  // 53 top bits -> [0, 1)
  return static_cast<double>(w >> 11) * 0x1.0p-53;
}

// Sequential stream (Java SplittableRandom style): state advances by the
// golden gamma, outputs are finalized with mix().
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return to_unit(next_u64()); }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

  // Uniform integer in [lo, hi], inclusive.
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace anchors::rng
