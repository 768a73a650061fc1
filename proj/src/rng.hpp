#pragma once

#include <cstdint>

namespace asymstream {

/// Deterministic 64-bit generator with platform-independent output.
/// Used wherever a seed must reproduce byte-identical results.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound >= 1. Rejection keeps it unbiased.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi], inclusive.
  uint64_t next_in(uint64_t lo, uint64_t hi) { return lo + next_below(hi - lo + 1); }

 private:
  uint64_t state_;
};

}  // namespace asymstream
