#pragma once

// Slow, independent reference implementations. None of these call into the
// library; they exist to cross-check it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline std::optional<u64> inverse(u64 x, u64 m) {
  for (u64 y = 1; y < m; ++y) {
    if ((unsigned __int128)x * y % m == 1 % m) return y;
  }
  return std::nullopt;
}

inline u64 phi(u64 m) {
  u64 c = 0;
  for (u64 x = 0; x < m; ++x) c += std::gcd(x, m) == 1;
  return m == 1 ? 1 : c;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline u64 smallest_factor(u64 n) {
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

/// Smallest-prime-factor table for [0, limit].
inline std::vector<std::uint32_t> spf_sieve(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

/// Brute force over every cell of the square.
inline std::vector<std::pair<u64, u64>> solutions(u64 n, u64 m) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 x = 0; x < m; ++x) {
    for (u64 y = 0; y < m; ++y) {
      if ((unsigned __int128)x * y % m == n % m) out.emplace_back(x, y);
    }
  }
  return out;
}

inline u64 count_rect(u64 n, u64 m, u64 x1, u64 x2, u64 y1, u64 y2) {
  u64 c = 0;
  for (u64 x = x1; x < x2; ++x) {
    for (u64 y = y1; y < y2; ++y) c += (unsigned __int128)x * y % m == n % m;
  }
  return c;
}

/// sum over units x of exp(2 pi i (m x + n x^-1) / a), with the inverse
/// found by search and the phase kept as an exact rational.
inline std::complex<long double> kloosterman(i64 m, i64 n, u64 a) {
  const long double pi = 3.141592653589793238462643383279502884L;
  std::complex<long double> s = 0;
  const i64 ai = static_cast<i64>(a);
  for (u64 x = 1; x < a; ++x) {
    if (std::gcd(x, a) != 1) continue;
    const auto inv = inverse(x, a);
    if (!inv) continue;
    i64 t = ((m % ai) * static_cast<i64>(x) + (n % ai) * static_cast<i64>(*inv)) % ai;
    if (t < 0) t += ai;
    const long double angle = 2 * pi * static_cast<long double>(t) / static_cast<long double>(a);
    s += std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return s;
}

/// Sum of squared counts over all a^2 cells [s*w, (s+1)*w) x [t*h, (t+1)*h)
/// of the wa x ha rectangle, each coordinate reduced mod a.
inline u64 torus_sum_squares(u64 n, u64 a, u64 w, u64 h) {
  u64 total = 0;
  for (u64 s = 0; s < a; ++s) {
    for (u64 t = 0; t < a; ++t) {
      u64 c = 0;
      for (u64 x = s * w; x < (s + 1) * w; ++x) {
        for (u64 y = t * h; y < (t + 1) * h; ++y) {
          c += (unsigned __int128)(x % a) * (y % a) % a == n % a;
        }
      }
      total += c * c;
    }
  }
  return total;
}

/// Sum of squared counts over the tiling of [0, a)^2 by w x h cells.
inline u64 square_sum_squares(u64 n, u64 a, u64 w, u64 h) {
  u64 total = 0;
  for (u64 x0 = 0; x0 < a; x0 += w) {
    for (u64 y0 = 0; y0 < a; y0 += h) {
      const u64 c = count_rect(n, a, x0, std::min(x0 + w, a), y0, std::min(y0 + h, a));
      total += c * c;
    }
  }
  return total;
}

/// Least-squares slope of y against x.
inline double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
