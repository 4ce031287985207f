#include <algorithm>

#include "doctest.h"
#include "hideseek/polysearch.hpp"
#include "hideseek/random.hpp"
#include "oracles.hpp"

using namespace hideseek;

namespace {

struct Planted {
  u64 a, d, n;
  std::vector<u64> u, v;
};

std::vector<u64> random_digits(SplitMix64& rng, u64 a, u64 d) {
  std::vector<u64> c(d + 1);
  for (u64 i = 0; i <= d; ++i) c[i] = rng.uniform_below(a);
  c[d] = rng.uniform_in(1, a - 1);
  return c;
}

// Exact-degree factors with N <= nmax and N coprime to a - delta for all delta.
Planted plant(SplitMix64& rng, u64 d, u64 nmax) {
  while (true) {
    const u64 a = rng.uniform_in(d + 3, 60);
    const auto u = random_digits(rng, a, d), v = random_digits(rng, a, d);
    const u128 n = eval_poly(u, a) * eval_poly(v, a);
    if (n > nmax) continue;
    bool ok = true;
    for (u64 delta = 0; delta <= d; ++delta) ok &= gcd(static_cast<u64>(n), a - delta) == 1;
    if (ok) return {a, d, static_cast<u64>(n), u, v};
  }
}

bool in_set(const std::vector<HyperbolaPoint>& set, u128 x, u128 y) {
  if ((x >> 64) || (y >> 64)) return false;
  return std::binary_search(set.begin(), set.end(), HyperbolaPoint{static_cast<u64>(x), static_cast<u64>(y)});
}

}  // namespace

TEST_CASE("digits examples and round trip") {
  CHECK(digits(5, 6).digits == std::vector<u64>{5});
  CHECK(digits(77, 6).digits == std::vector<u64>{5, 0, 2});
  CHECK(digits(343, 7).digits == std::vector<u64>{0, 0, 0, 1});
  CHECK_THROWS_AS(digits(0, 6), std::invalid_argument);
  CHECK_THROWS_AS(digits(5, 1), std::invalid_argument);
  SplitMix64 rng(9);
  for (int t = 0; t < 100000; ++t) {
    const u64 a = rng.uniform_in(2, 1ULL << rng.uniform_in(1, 40));
    const u64 u = rng.uniform_in(1, ~0ULL);
    const DigitVector dv = digits(u, a);
    REQUIRE(dv.digits.back() != 0);
    REQUIRE(evaluate(dv) == u);
  }
}

TEST_CASE("lambda examples and geometric identity") {
  for (u64 d = 0; d < 6; ++d) CHECK(lambda(d, 0) == 1);
  CHECK(lambda(3, 1) == 4);
  CHECK(lambda(2, 2) == 7);
  for (u64 d = 0; d < 10; ++d) {
    for (u64 delta = 2; delta < 30; ++delta) {
      u128 power = 1;
      for (u64 k = 0; k <= d; ++k) power *= delta;
      REQUIRE(static_cast<u128>(lambda(d, delta)) * (delta - 1) == power - 1);
    }
  }
}

TEST_CASE("extended_solutions examples") {
  for (u64 a : {5ULL, 6ULL, 13ULL}) {
    const auto ext = std::get<std::vector<HyperbolaPoint>>(extended_solutions(77, a, 0, 2));
    if (gcd(77, a) == 1) CHECK(ext == std::get<SolutionSet>(solve_all(77, a)).points);
  }
  const auto ext = std::get<std::vector<HyperbolaPoint>>(extended_solutions(77, 6, 1, 2));
  CHECK(in_set(ext, 7, 11));
  for (const auto& p : ext) {
    REQUIRE(p.x > 0);
    REQUIRE(p.x < 18);
    REQUIRE(p.y < 18);
    REQUIRE((p.x * p.y) % 5 == 77 % 5);
  }
  const auto cf = extended_solutions(10, 6, 1, 1);
  REQUIRE(std::holds_alternative<CommonFactor>(cf));
  CHECK(std::get<CommonFactor>(cf).divisor == 5);
  CHECK_THROWS_AS(extended_solutions(7, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("extended_solutions count equals direct enumeration") {
  SplitMix64 rng(14);
  for (int t = 0; t < 40; ++t) {
    const u64 d = rng.uniform_in(1, 3);
    const u64 a = rng.uniform_in(d + 2, 25);
    const u64 delta = rng.uniform_in(0, d);
    u64 n = rng.uniform_in(1, 100000);
    while (gcd(n, a - delta) != 1) ++n;
    const u64 box = a * lambda(d, delta);
    u64 expect = 0;
    for (u64 x = 1; x < box; ++x) {
      for (u64 y = 1; y < box; ++y) expect += (x * y) % (a - delta) == n % (a - delta);
    }
    const auto ext = std::get<std::vector<HyperbolaPoint>>(extended_solutions(n, a, delta, d));
    REQUIRE(ext.size() == expect);
    REQUIRE(std::is_sorted(ext.begin(), ext.end()));
  }
}

TEST_CASE("poly_search degree one on N = 77, a = 6") {
  const auto inst = std::get<PolyInstance>(build_instance(77, 6, 1));
  const auto found = poly_search(inst);
  const PolyCoefficients want{{1, 1}, {5, 1}};
  CHECK(std::find(found.begin(), found.end(), want) != found.end());
  for (const auto& pc : found) {
    REQUIRE(pc.u.back() >= 1);
    REQUIRE(pc.v.back() >= 1);
  }
}

TEST_CASE("poly_search on an empty set") {
  PolyInstance inst{77, 6, 1, {{{1, 5}}, {}}};
  CHECK(poly_search(inst).empty());
}

TEST_CASE("poly_search is sound and complete on planted instances") {
  SplitMix64 rng(15);
  for (u64 d : {1ULL, 2ULL}) {
    for (int t = 0; t < 40; ++t) {
      const Planted p = plant(rng, d, 10'000'000);
      const auto inst = std::get<PolyInstance>(build_instance(p.n, p.a, p.d));
      const auto found = poly_search(inst);
      INFO("n=" << p.n << " a=" << p.a << " d=" << d);
      REQUIRE(std::find(found.begin(), found.end(), PolyCoefficients{p.u, p.v}) != found.end());
      for (const auto& pc : found) {
        REQUIRE(pc.u.size() == d + 1);
        for (u64 delta = 0; delta <= d; ++delta) {
          REQUIRE(in_set(inst.sets[delta], eval_poly(pc.u, delta), eval_poly(pc.v, delta)));
        }
        for (u64 c : pc.u) REQUIRE(c < p.a);
        for (u64 c : pc.v) REQUIRE(c < p.a);
      }
    }
  }
}

TEST_CASE("factor_via_poly examples") {
  CHECK(factor_via_poly(77, 6, 1) == Factorization{77, 7, 11});
  CHECK_FALSE(factor_via_poly(77, 4, 2).has_value());
  CHECK(factor_via_poly(77, 8, 1) == Factorization{77, 7, 11});  // gcd(77, 7) shortcut
  SplitMix64 rng(16);
  for (int t = 0; t < 30; ++t) {
    const Planted p = plant(rng, 2, 10'000'000);
    const auto f = factor_via_poly(p.n, p.a, 2);
    REQUIRE(f.has_value());
    REQUIRE(static_cast<u128>(f->u) * f->v == p.n);
  }
}

TEST_CASE("degree one agrees with the pair search") {
  SplitMix64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const Planted p = plant(rng, 1, 10'000'000);
    const auto poly = factor_via_poly(p.n, p.a, 1);
    const auto pair = pair_search(p.n, {p.a, p.a, p.a, false}, 1, 1);
    REQUIRE(poly.has_value() == pair.has_value());
  }
  for (u64 n : {1009ULL, 1013ULL, 2003ULL}) {
    for (u64 a = 3; a < 40; ++a) {
      if (gcd(n, a) != 1 || gcd(n, a - 1) != 1) continue;
      CHECK(factor_via_poly(n, a, 1).has_value() == pair_search(n, {a, a, a, false}, 1, 1).has_value());
    }
  }
}

TEST_CASE("instance budget") {
  CHECK(predicted_instance_size(6, 1) == euler_phi(6) + euler_phi(5) * 4);
  PolyLimits tiny{10};
  CHECK_THROWS_AS(build_instance(1000003, 50, 2, tiny), TooLarge);
  CHECK_THROWS_AS(factor_via_poly(1000003, 50, 2, tiny), TooLarge);
}
