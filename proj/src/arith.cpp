#include "hideseek/arith.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hideseek {

u64 gcd(u64 x, u64 y) {
  while (y != 0) {
    u64 r = x % y;
    x = y;
    y = r;
  }
  return x;
}

ExtGcd ext_gcd(u64 x, u64 y) {
  i128 r0 = x, r1 = y;
  i128 s0 = 1, s1 = 0;
  i128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return {static_cast<u64>(r0), static_cast<i64>(s0), static_cast<i64>(t0)};
}

std::optional<u64> mod_inv(u64 x, u64 m) {
  if (m < 2) throw std::invalid_argument("mod_inv: modulus must be >= 2");
  x %= m;
  if (x == 0) return std::nullopt;
  ExtGcd e = ext_gcd(x, m);
  if (e.g != 1) return std::nullopt;
  i128 s = e.s % static_cast<i128>(m);
  if (s < 0) s += m;
  return static_cast<u64>(s);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void invert_units(u64 m, std::span<const u64> xs, std::span<u64> out) {
  if (xs.size() != out.size()) throw std::invalid_argument("invert_units: size mismatch");
  if (xs.empty()) return;
  // Prefix products land in out[], then one inversion unwinds them.
  u64 acc = 1 % m;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = acc;
    acc = mul_mod(acc, xs[i] % m, m);
  }
  std::optional<u64> inv = mod_inv(acc, m);
  if (!inv) throw std::invalid_argument("invert_units: input contains a non-unit");
  u64 running = *inv;
  for (std::size_t i = xs.size(); i-- > 0;) {
    u64 x = xs[i] % m;
    out[i] = mul_mod(running, out[i], m);
    running = mul_mod(running, x, m);
  }
}

InverseTable::InverseTable(u64 modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("batch_inverses: modulus must be >= 2");
  std::vector<bool> composite_with(modulus, false);
  // Sieve out multiples of the prime divisors of the modulus.
  for (const auto& [p, e] : factorize_small(modulus)) {
    (void)e;
    for (u64 k = 0; k < modulus; k += p) composite_with[k] = true;
  }
  for (u64 x = 1; x < modulus; ++x) {
    if (!composite_with[x]) units_.push_back(x);
  }
  std::vector<u64> inv(units_.size());
  invert_units(modulus, units_, inv);
  inv_.assign(modulus, 0);
  for (std::size_t i = 0; i < units_.size(); ++i) inv_[units_[i]] = inv[i];
}

u64 InverseTable::at(u64 x) const {
  if (!contains(x)) throw std::out_of_range("InverseTable::at: not a unit");
  return inv_[x];
}

InverseTable batch_inverses(u64 m) { return InverseTable(m); }

std::vector<std::pair<u64, unsigned>> factorize_small(u64 m) {
  std::vector<std::pair<u64, unsigned>> out;
  if (m < 2) return out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= m / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

u64 euler_phi(u64 m) {
  if (m == 0) throw std::invalid_argument("euler_phi: m must be >= 1");
  u64 phi = m;
  for (const auto& [p, e] : factorize_small(m)) {
    (void)e;
    phi = phi / p * (p - 1);
  }
  return phi;
}

u64 divisor_count(u64 m) {
  if (m == 0) throw std::invalid_argument("divisor_count: m must be >= 1");
  u64 tau = 1;
  for (const auto& [p, e] : factorize_small(m)) {
    (void)p;
    tau *= e + 1;
  }
  return tau;
}

int mobius(u64 m) {
  if (m == 0) throw std::invalid_argument("mobius: m must be >= 1");
  int mu = 1;
  for (const auto& [p, e] : factorize_small(m)) {
    (void)p;
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

namespace {

u128 cube(u64 k) { return static_cast<u128>(k) * k * k; }

u64 floor_cbrt(u128 n) {
  if (n == 0) return 0;
  // Start above the root; the integer Newton step then decreases
  // monotonically until it reaches floor(cbrt(n)).
  unsigned bits = 128 - static_cast<unsigned>(
                            n >> 64 ? std::countl_zero(static_cast<u64>(n >> 64))
                                    : 64 + std::countl_zero(static_cast<u64>(n)));
  u128 x = static_cast<u128>(1) << ((bits + 2) / 3);
  while (true) {
    u128 y = (2 * x + n / (x * x)) / 3;
    if (y >= x) break;
    x = y;
  }
  u64 k = static_cast<u64>(x);
  while (cube(k) > n) --k;
  while (cube(k + 1) <= n) ++k;
  return k;
}

}  // namespace

u64 ceil_cbrt(u128 n) {
  if (n == 0) throw std::invalid_argument("ceil_cbrt: n must be >= 1");
  if (n >> 120) throw std::invalid_argument("ceil_cbrt: n too large");
  u64 k = floor_cbrt(n);
  return cube(k) == n ? k : k + 1;
}

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 x = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(x) * x > n) --x;
  while (static_cast<u128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

u64 ceil_sqrt(u64 n) {
  u64 r = isqrt(n);
  return static_cast<u128>(r) * r == n ? r : r + 1;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace hideseek
