#pragma once

#include <cstdint>
#include <random>

namespace fcai {

// splitmix64 finalizer; scrambles seeds and derives per-trial streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream seed for trial `index` under a master seed.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ index);
}

// Deterministic 64-bit-seed generator. Draws are hand-rolled from raw engine
// output so results do not depend on the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1), 53 bits
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [lo, hi], both inclusive; requires lo <= hi
  std::uint64_t next_in_range(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next_u64();  // full 64-bit range
    const std::uint64_t reject_below = (0 - span) % span;  // 2^64 mod span
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x < reject_below);
    return lo + x % span;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fcai
