// Deterministic RNG: splitmix64 with keyed substreams so parallel
// consumers draw identical values regardless of scheduling.
#pragma once

#include <cstdint>

namespace phoncontrast {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) via 128-bit multiply-shift; bias-free enough for
  // resampling and fully deterministic across platforms.
  uint64_t bounded(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Derives an independent substream for (seed, stream, salt). Mixing the key
// through two output rounds decorrelates adjacent streams.
inline SplitMix64 substream(uint64_t seed, uint64_t stream, uint64_t salt = 0) {
  SplitMix64 k(seed ^ (stream + 1) * 0xD1B54A32D192ED03ULL ^
               (salt + 1) * 0x8CB92BA72F3D8DD7ULL);
  uint64_t s = k.next();
  s ^= k.next() << 1;
  return SplitMix64(s);
}

}  // namespace phoncontrast
