#pragma once

// Seedable generator and test-input samplers.
//
// SplitMix64, bit-exact:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// uniform_below(n) rejects draws r < (2^64 - n) mod n, then returns r mod n.

#include <optional>

#include "hideseek/arith.hpp"

namespace hideseek {

class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed = 0) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n >= 1.
  u64 uniform_below(u64 n) {
    const u64 threshold = (0 - n) % n;
    while (true) {
      const u64 r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform in [lo, hi]; lo <= hi.
  u64 uniform_in(u64 lo, u64 hi) {
    if (hi - lo == ~0ULL) return next();
    return lo + uniform_below(hi - lo + 1);
  }

  u64 state() const { return state_; }

 private:
  u64 state_;
};

/// A prime in [lo, hi]: the first prime at or after a uniform start,
/// wrapping to lo. nullopt if the interval holds no prime.
std::optional<u64> random_prime(SplitMix64& rng, u64 lo, u64 hi);

struct Semiprime {
  u64 n = 0;
  u64 p = 0;  // p <= q
  u64 q = 0;
};

/// p <= q < 2p, nmin <= n <= nmax. nullopt after a bounded number of tries.
std::optional<Semiprime> random_balanced_semiprime(SplitMix64& rng, u64 nmin, u64 nmax);

/// p <= q with p log-uniform, nmin <= n <= nmax.
std::optional<Semiprime> random_semiprime(SplitMix64& rng, u64 nmin, u64 nmax);

}  // namespace hideseek
