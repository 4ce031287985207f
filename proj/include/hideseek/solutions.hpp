#pragma once

// Points of the modular hyperbola xy = N (mod m).

#include <compare>
#include <variant>
#include <vector>

#include "hideseek/arith.hpp"

namespace hideseek {

struct HyperbolaPoint {
  u64 x = 0;
  u64 y = 0;
  friend auto operator<=>(const HyperbolaPoint&, const HyperbolaPoint&) = default;
};

struct SolutionSet {
  u64 modulus = 0;
  u64 target = 0;  // N mod modulus
  std::vector<HyperbolaPoint> points;  // ascending x
};

/// gcd(N, m) > 1. For factoring this is a result, not a failure.
struct CommonFactor {
  u64 divisor = 0;
  friend bool operator==(const CommonFactor&, const CommonFactor&) = default;
};

template <class T>
using OrCommonFactor = std::variant<T, CommonFactor>;

/// Half-open rectangle [x1, x2) x [y1, y2).
struct Rect {
  u64 x1 = 0, x2 = 0, y1 = 0, y2 = 0;
  u64 width() const { return x2 - x1; }
  u64 height() const { return y2 - y1; }
  u128 area() const { return static_cast<u128>(width()) * height(); }
  bool contains(const HyperbolaPoint& p) const {
    return p.x >= x1 && p.x < x2 && p.y >= y1 && p.y < y2;
  }
};

/// Throws std::invalid_argument unless 0 <= x1 < x2 <= m and likewise for y.
void validate_rect(const Rect& r, u64 m);

/// All phi(m) points in [0, m)^2, ascending x.
OrCommonFactor<SolutionSet> solve_all(u64 n, u64 m);

/// The points of solve_all with x in [x0, min(x0 + width, m)), using only
/// strip-local inverses.
OrCommonFactor<std::vector<HyperbolaPoint>> solve_strip(u64 n, u64 m, u64 x0, u64 width);

/// Exact number of points inside r (brute force over the x-range of r).
OrCommonFactor<u64> count_in_rect(u64 n, u64 m, const Rect& r);

}  // namespace hideseek
