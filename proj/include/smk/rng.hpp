#pragma once

// SplitMix64 (Steele, Lea & Flood 2014). Chosen because instances must
// regenerate byte-identically from (config, seed) in any language: the
// generator is tiny, fully specified, and has published reference outputs.

#include <cstdint>

namespace smk {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased-enough modulo draw; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform value on a dyadic grid in [lo, hi]: exact in binary floating
  // point, so serialized instances round-trip bit-for-bit.
  double grid(double lo, double hi, int steps = 1024) {
    return lo + static_cast<double>(below(steps + 1)) * (hi - lo) / steps;
  }
};

}  // namespace smk
