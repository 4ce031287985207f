#pragma once

// Polynomial digit search: write U and V in base a as degree-d polynomials
// u(t), v(t) evaluated at t = a. Since a = delta (mod a - delta), the point
// (u(delta), v(delta)) solves xy = N (mod a - delta) for every delta, and
// it lies in the box 0 < x, y < a * lambda(d, delta). Finding one point per
// delta = 0..d that fits a common integer polynomial recovers U and V.

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hideseek/factor.hpp"
#include "hideseek/solutions.hpp"

namespace hideseek {

/// Base-a digits, least significant first; the last digit is nonzero.
struct DigitVector {
  u64 base = 0;
  std::vector<u64> digits;
};

DigitVector digits(u64 value, u64 a);

/// sum digits[i] * base^i. Throws std::overflow_error past 64 bits.
u64 evaluate(const DigitVector& dv);

/// 1 + delta + ... + delta^d. Throws std::overflow_error past 64 bits.
u64 lambda(u64 d, u64 delta);

/// The instance would exceed the configured point budget.
class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct PolyLimits {
  u64 max_points = 10'000'000;
};

/// Points with xy = N (mod a - delta) and 0 < x, y < a * lambda(d, delta),
/// sorted by (x, y).
OrCommonFactor<std::vector<HyperbolaPoint>> extended_solutions(u64 n, u64 a, u64 delta, u64 d,
                                                               const PolyLimits& limits = {});

struct PolyInstance {
  u64 n = 0;
  u64 a = 0;
  u64 d = 0;
  std::vector<std::vector<HyperbolaPoint>> sets;  // sets[delta], delta = 0..d
};

/// Predicted total size sum_delta phi(a - delta) * lambda(d, delta)^2.
u64 predicted_instance_size(u64 a, u64 d);

/// Requires a - d >= 2. Throws TooLarge when the predicted size exceeds
/// limits.max_points.
OrCommonFactor<PolyInstance> build_instance(u64 n, u64 a, u64 d, const PolyLimits& limits = {});

/// Coefficients, least significant first (u[0] = u_0).
struct PolyCoefficients {
  std::vector<u64> u;
  std::vector<u64> v;
  friend auto operator<=>(const PolyCoefficients&, const PolyCoefficients&) = default;
};

/// sum coeffs[i] * t^i in 128 bits.
u128 eval_poly(const std::vector<u64>& coeffs, u64 t);

/// Every pair of exact-degree-d polynomials with coefficients in [0, a)
/// whose values at delta = 0..d land in the corresponding sets. Sorted.
std::vector<PolyCoefficients> poly_search(const PolyInstance& inst);

/// Builds the instance, searches it and returns the first verified split.
/// Common factors of N with a - delta short-circuit into a split.
std::optional<Factorization> factor_via_poly(u64 n, u64 a, u64 d, const PolyLimits& limits = {});

}  // namespace hideseek
