#include "hideseek/solutions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hideseek {

namespace {

void require_modulus(u64 m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(m));
}

// Units in [lo, hi) and their inverses, from one extended-gcd call.
void strip_units(u64 m, u64 lo, u64 hi, std::vector<u64>& units, std::vector<u64>& inv) {
  units.clear();
  for (u64 x = lo; x < hi; ++x) {
    if (gcd(x, m) == 1) units.push_back(x);
  }
  inv.resize(units.size());
  invert_units(m, units, inv);
}

}  // namespace

void validate_rect(const Rect& r, u64 m) {
  if (!(r.x1 < r.x2 && r.x2 <= m && r.y1 < r.y2 && r.y2 <= m)) {
    throw std::invalid_argument("rectangle must satisfy 0 <= x1 < x2 <= m and 0 <= y1 < y2 <= m");
  }
}

OrCommonFactor<SolutionSet> solve_all(u64 n, u64 m) {
  require_modulus(m);
  u64 g = gcd(n, m);
  if (g != 1) return CommonFactor{g};
  SolutionSet set;
  set.modulus = m;
  set.target = n % m;
  InverseTable table(m);
  set.points.reserve(table.size());
  for (u64 x : table.units()) set.points.push_back({x, mul_mod(set.target, table.at(x), m)});
  return set;
}

OrCommonFactor<std::vector<HyperbolaPoint>> solve_strip(u64 n, u64 m, u64 x0, u64 width) {
  require_modulus(m);
  if (x0 >= m) throw std::invalid_argument("solve_strip: x0 must be < m");
  if (width == 0) throw std::invalid_argument("solve_strip: width must be >= 1");
  u64 g = gcd(n, m);
  if (g != 1) return CommonFactor{g};
  u64 hi = width >= m - x0 ? m : x0 + width;
  std::vector<u64> units, inv;
  strip_units(m, x0, hi, units, inv);
  u64 target = n % m;
  std::vector<HyperbolaPoint> points;
  points.reserve(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    points.push_back({units[i], mul_mod(target, inv[i], m)});
  }
  return points;
}

OrCommonFactor<u64> count_in_rect(u64 n, u64 m, const Rect& r) {
  require_modulus(m);
  validate_rect(r, m);
  u64 g = gcd(n, m);
  if (g != 1) return CommonFactor{g};
  std::vector<u64> units, inv;
  strip_units(m, r.x1, r.x2, units, inv);
  u64 target = n % m;
  u64 count = 0;
  for (u64 xi : inv) {
    u64 y = mul_mod(target, xi, m);
    if (y >= r.y1 && y < r.y2) ++count;
  }
  return count;
}

}  // namespace hideseek
