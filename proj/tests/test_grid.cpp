#include <map>
#include <algorithm>
#include <set>

#include "doctest.h"
#include "hideseek/grid.hpp"
#include "hideseek/random.hpp"

using namespace hideseek;

namespace {

using PairKey = std::pair<std::pair<u64, u64>, std::pair<u64, u64>>;

std::map<PairKey, int> collect(const CellCounts& base, const CellCounts& shifted, u64 dx, u64 dy) {
  std::map<PairKey, int> seen;
  neighbor_pairs(base, shifted, dx, dy, [&](const HyperbolaPoint& p, const HyperbolaPoint& q, WrapFlags) {
    ++seen[{{p.x, p.y}, {q.x, q.y}}];
    return ScanControl::kContinue;
  });
  return seen;
}

u64 cyclic(u64 s, u64 t, u64 a) {
  const u64 d = s > t ? s - t : t - s;
  return std::min(d, a - d);
}

// Distinct points, like a real solution set.
std::vector<HyperbolaPoint> random_points(SplitMix64& rng, u64 a, u64 count) {
  std::set<HyperbolaPoint> s;
  count = std::min(count, a * a);
  while (s.size() < count) s.insert({rng.uniform_below(a), rng.uniform_below(a)});
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("make_grid examples") {
  const Grid g1 = make_grid(6, 3, 3);
  CHECK(g1.cols == 2);
  CHECK(g1.rows == 2);
  const Grid g2 = make_grid(6, 4, 4);
  CHECK(g2.cols == 2);
  CHECK(g2.rows == 2);
  CHECK(g2.cell_rect(1, 1).width() == 2);
  CHECK(g2.cell_rect(1, 1).height() == 2);
  const Grid g3 = make_grid(5, 3, 2);
  CHECK(g3.cols == 2);
  CHECK(g3.rows == 3);
  CHECK_THROWS_AS(make_grid(5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(5, 6, 1), std::invalid_argument);
}

TEST_CASE("bucket examples") {
  const std::vector<HyperbolaPoint> two{{1, 5}, {5, 1}};
  const CellCounts c = bucket(two, make_grid(6, 3, 3));
  REQUIRE(c.count(0, 1) == 1);
  CHECK(c.cell(0, 1)[0] == HyperbolaPoint{1, 5});
  REQUIRE(c.count(1, 0) == 1);
  CHECK(c.cell(1, 0)[0] == HyperbolaPoint{5, 1});
  CHECK(c.count(0, 0) == 0);
  CHECK(c.count(1, 1) == 0);

  const CellCounts empty = bucket({}, make_grid(7, 2, 3));
  for (u64 i = 0; i < empty.grid().cols; ++i) {
    for (u64 j = 0; j < empty.grid().rows; ++j) CHECK(empty.count(i, j) == 0);
  }

  const std::vector<HyperbolaPoint> four{{1, 1}, {2, 3}, {3, 2}, {4, 4}};
  const CellCounts f = bucket(four, make_grid(5, 3, 3));
  CHECK(f.cell(0, 0)[0] == HyperbolaPoint{1, 1});
  CHECK(f.cell(0, 1)[0] == HyperbolaPoint{2, 3});
  CHECK(f.cell(1, 0)[0] == HyperbolaPoint{3, 2});
  CHECK(f.cell(1, 1)[0] == HyperbolaPoint{4, 4});

  const std::vector<HyperbolaPoint> outside{{5, 0}};
  CHECK_THROWS_AS(bucket(outside, make_grid(5, 3, 3)), std::out_of_range);
}

TEST_CASE("cells tile the square") {
  SplitMix64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const u64 a = rng.uniform_in(1, 300);
    const Grid g = make_grid(a, rng.uniform_in(1, a), rng.uniform_in(1, a));
    u128 area = 0;
    for (u64 i = 0; i < g.cols; ++i) {
      for (u64 j = 0; j < g.rows; ++j) area += g.cell_rect(i, j).area();
    }
    REQUIRE(area == static_cast<u128>(a) * a);
    const auto p = random_points(rng, a, 500);
    const CellCounts c = bucket(p, g);
    u64 total = 0;
    for (u64 i = 0; i < g.cols; ++i) {
      for (u64 j = 0; j < g.rows; ++j) {
        for (const auto& q : c.cell(i, j)) REQUIRE(g.cell_rect(i, j).contains(q));
        total += c.count(i, j);
      }
    }
    REQUIRE(total == p.size());
  }
}

TEST_CASE("neighbor_pairs examples") {
  const Grid g = make_grid(9, 3, 3);
  const std::vector<HyperbolaPoint> p{{4, 4}}, q{{5, 3}};
  const auto pairs = collect(bucket(p, g), bucket(q, g), 1, 1);
  CHECK(pairs.size() == 1);
  CHECK(pairs.count({{4, 4}, {5, 3}}) == 1);

  const std::vector<HyperbolaPoint> right{{8, 4}}, left{{0, 4}};
  int hits = 0;
  neighbor_pairs(bucket(right, g), bucket(left, g), 1, 0, [&](const HyperbolaPoint&, const HyperbolaPoint&, WrapFlags w) {
    ++hits;
    CHECK(w.col);
    CHECK_FALSE(w.row);
    return ScanControl::kContinue;
  });
  CHECK(hits == 1);

  CHECK_THROWS_AS(neighbor_pairs(bucket(p, g), bucket(q, make_grid(9, 2, 3)), 1, 1,
                                 [](const HyperbolaPoint&, const HyperbolaPoint&, WrapFlags) {
                                   return ScanControl::kContinue;
                                 }),
                  std::invalid_argument);
}

TEST_CASE("neighbor_pairs stops on request") {
  const Grid g = make_grid(10, 10, 10);
  SplitMix64 rng(1);
  const auto p = random_points(rng, 10, 20);
  int calls = 0;
  const u64 visited = neighbor_pairs(bucket(p, g), bucket(p, g), 1, 1,
                                     [&](const HyperbolaPoint&, const HyperbolaPoint&, WrapFlags) {
                                       return ++calls == 5 ? ScanControl::kStop : ScanControl::kContinue;
                                     });
  CHECK(calls == 5);
  CHECK(visited == 5);
}

TEST_CASE("whole-grid radius yields every pair exactly once") {
  SplitMix64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const u64 a = rng.uniform_in(2, 80);
    const Grid g = make_grid(a, rng.uniform_in(1, a), rng.uniform_in(1, a));
    const auto p = random_points(rng, a, rng.uniform_in(0, 40));
    const auto q = random_points(rng, a, rng.uniform_in(0, 40));
    std::map<PairKey, int> expect;
    for (const auto& x : p) {
      for (const auto& y : q) ++expect[{{x.x, x.y}, {y.x, y.y}}];
    }
    const auto seen = collect(bucket(p, g), bucket(q, g), g.cols, g.rows);
    REQUIRE(seen == expect);
  }
}

TEST_CASE("radius one covers every pair closer than a cell") {
  SplitMix64 rng(31);
  for (int t = 0; t < 400; ++t) {
    const u64 a = rng.uniform_in(2, 120);
    const u64 w = rng.uniform_in(1, a), h = rng.uniform_in(1, a);
    const Grid g = make_grid(a, w, h);
    const auto p = random_points(rng, a, 30);
    const auto q = random_points(rng, a, 30);
    const auto seen = collect(bucket(p, g), bucket(q, g), 1, 1);
    for (const auto& [key, n] : seen) REQUIRE(n == 1);
    for (const auto& x : p) {
      for (const auto& y : q) {
        if (cyclic(x.x, y.x, a) < w && cyclic(x.y, y.y, a) < h) {
          INFO("a=" << a << " w=" << w << " h=" << h);
          REQUIRE(seen.count({{x.x, x.y}, {y.x, y.y}}) == 1);
        }
      }
    }
  }
}

TEST_CASE("neighbor_lines on a truncated last line") {
  // extent 10, size 4: lines [0,4) [4,8) [8,10). Coordinates 9 and 2 are at
  // cyclic distance 3 < 4 but lines 2 and 0 must still be neighbours.
  const auto n2 = neighbor_lines(10, 4, 3, 2, 1);
  bool has0 = false;
  for (const auto& l : n2) has0 |= l.index == 0 && l.wrapped;
  CHECK(has0);
  const auto n0 = neighbor_lines(10, 4, 3, 0, 1);
  CHECK(n0.size() == 3);
  CHECK_THROWS_AS(neighbor_lines(10, 4, 3, 3, 1), std::out_of_range);
}
