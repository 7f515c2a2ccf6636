#pragma once

#include <cstdint>

namespace ksl {

// splitmix64 (Vigna, public domain reference implementation). One 64-bit
// word of state, identical output on every platform; the constants below
// are the published reference values.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with a 53-bit mantissa
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // unbiased uniform in [0, n); requires n >= 1
  uint64_t next_below(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      const uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  uint64_t state_;
};

// splitmix64 finalizer as a standalone mixer
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Independent stream for task `index` of a run seeded with `seed`: offset by
// multiples of the golden gamma, then mix. Streams never depend on how work
// is scheduled, only on the index.
inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
  return mix64(seed + (index + 1) * 0x9e3779b97f4a7c15ull);
}

}  // namespace ksl
