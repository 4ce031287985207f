#pragma once

// Exact integer and modular arithmetic used throughout the library.
//
// All values are unsigned 64-bit; products are carried in 128 bits so that
// moduli and operands up to 2^63 never overflow.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hideseek {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 gcd(u64 x, u64 y);

struct ExtGcd {
  u64 g = 0;
  i64 s = 0;
  i64 t = 0;
};

/// s*x + t*y == g == gcd(x, y). Inputs must be below 2^63 and not both zero.
ExtGcd ext_gcd(u64 x, u64 y);

/// Inverse of x modulo m (m >= 2), or nullopt when gcd(x, m) != 1.
std::optional<u64> mod_inv(u64 x, u64 m);

inline u64 mul_mod(u64 x, u64 y, u64 m) {
  return static_cast<u64>(static_cast<u128>(x) * y % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverses of every unit modulo m, computed with one extended-gcd call.
class InverseTable {
 public:
  InverseTable() = default;
  explicit InverseTable(u64 modulus);

  u64 modulus() const { return modulus_; }
  /// Number of units, i.e. euler_phi(modulus).
  std::size_t size() const { return units_.size(); }
  bool contains(u64 x) const { return x < modulus_ && inv_[x] != 0; }
  /// Inverse of a unit x in [0, modulus). Throws std::out_of_range otherwise.
  u64 at(u64 x) const;
  /// Units in ascending order.
  const std::vector<u64>& units() const { return units_; }

 private:
  u64 modulus_ = 0;
  std::vector<u64> units_;
  std::vector<u64> inv_;  // inv_[x] == 0 marks a non-unit
};

InverseTable batch_inverses(u64 m);

/// Montgomery's trick: out[i] = xs[i]^{-1} mod m. Every xs[i] must be a
/// unit modulo m; throws std::invalid_argument otherwise.
void invert_units(u64 m, std::span<const u64> xs, std::span<u64> out);

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<u64, unsigned>> factorize_small(u64 m);

u64 euler_phi(u64 m);
u64 divisor_count(u64 m);
int mobius(u64 m);

/// Smallest k with k^3 >= n (n >= 1), exact.
u64 ceil_cbrt(u128 n);
/// Largest k with k^2 <= n.
u64 isqrt(u64 n);
/// Smallest k with k^2 >= n.
u64 ceil_sqrt(u64 n);

/// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(u64 n);

}  // namespace hideseek
