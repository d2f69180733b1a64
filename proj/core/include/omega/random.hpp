#pragma once

#include <cstdint>

namespace omega {

// SplitMix64. Used for every seeded suite so that sampled inputs are identical
// on every platform; std:: distributions are implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi], rejection sampled.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) return next();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return lo + draw % range;
  }

 private:
  std::uint64_t state_;
};

}  // namespace omega
