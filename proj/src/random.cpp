#include "hideseek/random.hpp"

#include <algorithm>
#include <bit>

namespace hideseek {

namespace {

constexpr int kMaxTries = 256;

u64 ceil_div(u64 x, u64 y) { return x / y + (x % y != 0); }

std::optional<Semiprime> pair_with(SplitMix64& rng, u64 p, u64 q_lo, u64 q_hi) {
  if (q_lo > q_hi) return std::nullopt;
  auto q = random_prime(rng, q_lo, q_hi);
  if (!q) return std::nullopt;
  return Semiprime{p * *q, p, *q};
}

}  // namespace

std::optional<u64> random_prime(SplitMix64& rng, u64 lo, u64 hi) {
  if (lo > hi) return std::nullopt;
  const u64 start = rng.uniform_in(lo, hi);
  for (u64 x = start;; ++x) {
    if (is_prime(x)) return x;
    if (x == hi) break;
  }
  for (u64 x = lo; x < start; ++x) {
    if (is_prime(x)) return x;
  }
  return std::nullopt;
}

std::optional<Semiprime> random_balanced_semiprime(SplitMix64& rng, u64 nmin, u64 nmax) {
  if (nmax < 4 || nmin > nmax) return std::nullopt;
  const u64 p_lo = std::max<u64>(2, ceil_sqrt(ceil_div(std::max<u64>(nmin, 1), 2)));
  const u64 p_hi = isqrt(nmax);
  for (int t = 0; t < kMaxTries; ++t) {
    auto p = random_prime(rng, p_lo, p_hi);
    if (!p) return std::nullopt;
    const u64 q_lo = std::max(*p, ceil_div(nmin, *p));
    const u64 q_hi = std::min(2 * *p - 1, nmax / *p);
    if (auto s = pair_with(rng, *p, q_lo, q_hi)) return s;
  }
  return std::nullopt;
}

std::optional<Semiprime> random_semiprime(SplitMix64& rng, u64 nmin, u64 nmax) {
  if (nmax < 4 || nmin > nmax) return std::nullopt;
  const u64 p_cap = isqrt(nmax);
  const int top_bit = std::bit_width(p_cap);
  for (int t = 0; t < kMaxTries; ++t) {
    const int e = static_cast<int>(rng.uniform_in(1, static_cast<u64>(top_bit)));
    const u64 lo = std::max<u64>(2, 1ULL << (e - 1));
    const u64 hi = std::min<u64>(p_cap, (1ULL << e) - 1);
    auto p = random_prime(rng, lo, std::max(lo, hi));
    if (!p || *p > p_cap) continue;
    const u64 q_lo = std::max(*p, ceil_div(nmin, *p));
    if (auto s = pair_with(rng, *p, q_lo, nmax / *p)) return s;
  }
  return std::nullopt;
}

}  // namespace hideseek
