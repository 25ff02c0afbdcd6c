#pragma once

#include <cmath>
#include <cstdint>

namespace gfflab {

// Deterministic, platform-independent RNG. xoshiro256++ seeded through
// splitmix64, with counter-based substream derivation so that replica i of a
// run is reproducible in isolation. No std::*_distribution anywhere: the
// uniform-to-double and Box-Muller conversions below are fixed by this code,
// so identical seeds give bit-identical streams on every platform.

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  // Substream for (parent seed, stream index): used to split a master seed
  // into per-replica and per-purpose streams.
  RngStream(uint64_t seed, uint64_t stream) : RngStream(mix(seed, stream)) {}

  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t sm = a ^ (0x9E3779B97F4A7C15ULL * (b + 1));
    uint64_t first = splitmix64(sm);
    return first ^ splitmix64(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on the open interval (0,1); never returns 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller with one cached variate.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gfflab
