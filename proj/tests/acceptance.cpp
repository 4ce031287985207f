// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hideseek/factor.hpp"
#include "hideseek/moments.hpp"
#include "hideseek/polysearch.hpp"
#include "hideseek/random.hpp"
#include "oracles.hpp"

using namespace hideseek;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

u64 next_prime(u64 n) {
  while (!is_prime(n)) ++n;
  return n;
}

// 1. Balanced semiprimes through hide_seek_balanced, general semiprimes
//    through the driver.
Outcome factoring_correctness() {
  SplitMix64 rng(0xA11CE);
  int balanced_ok = 0, general_ok = 0;
  const int samples = 1000;
  for (int t = 0; t < samples; ++t) {
    const u64 nmax = static_cast<u64>(std::pow(10.0, 6.0 + 6.0 * (t + 1) / samples));
    const auto s = random_balanced_semiprime(rng, nmax / 2, nmax);
    if (!s) continue;
    const auto f = hide_seek_balanced(s->n);
    balanced_ok += f && f->u == s->p && f->v == s->q;
  }
  for (int t = 0; t < samples; ++t) {
    const auto s = random_semiprime(rng, 1'000'000, 10'000'000'000ULL);
    if (!s) continue;
    const FactorResult r = factor(s->n, {FactorMethod::kGeneral});
    general_ok += r.kind == FactorKind::kSplit && r.split->u == s->p && r.split->v == s->q;
  }
  return {balanced_ok == samples && general_ok == samples,
          fmt("balanced %d/%d (N <= 1e12), general driver %d/%d (N <= 1e10)", balanced_ok, samples, general_ok,
              samples)};
}

// 2. Log-log slope of median balanced factoring time against N.
Outcome runtime_scaling() {
  SplitMix64 rng(0x5CA1E);
  std::vector<double> xs, ys;
  std::string detail;
  for (int e = 9; e <= 12; ++e) {
    const u64 nmax = static_cast<u64>(std::pow(10.0, e));
    std::vector<double> times;
    for (int t = 0; t < 20; ++t) {
      const auto s = random_balanced_semiprime(rng, nmax / 2, nmax);
      if (!s) continue;
      double best = 1e9;
      for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto f = hide_seek_balanced(s->n);
        best = std::min(best, seconds_since(t0));
        if (!f) return {false, fmt("no split for %llu", static_cast<unsigned long long>(s->n))};
      }
      times.push_back(best);
    }
    const double med = median(times);
    xs.push_back(std::log(static_cast<double>(nmax)));
    ys.push_back(std::log(med));
    detail += fmt("1e%d: %.3g s; ", e, med);
  }
  const double slope = oracle::slope(xs, ys);
  return {slope >= 0.25 && slope <= 0.45, detail + fmt("slope %.3f (target [0.25, 0.45])", slope)};
}

// 3. Direct torus moment equals the Kloosterman-sum expression.
Outcome spectral_identity() {
  SplitMix64 rng(0x5BEC);
  double worst = 0;
  int cases = 0, small_area = 0, large_area = 0;
  for (u64 a : std::vector<u64>{7, 11, 23, 47, 59}) {
    u64 random_n = rng.uniform_in(3, 1'000'000);
    while (gcd(random_n, a) != 1) ++random_n;
    const double big = std::pow(static_cast<double>(a), 1.5);
    const u64 root = coprime_adjust(ceil_sqrt(a), a);
    const u64 wide = coprime_adjust(static_cast<u64>(std::ceil(std::pow(static_cast<double>(a), 0.75))), a);
    const std::vector<std::pair<u64, u64>> shapes{{1, 1},
                                                  {2, coprime_adjust(std::max<u64>(1, a / 3), a)},
                                                  {3, 2},
                                                  {wide, wide},
                                                  {coprime_adjust(a + 1, a), root},
                                                  {coprime_adjust(2 * a, a), coprime_adjust(a / 2, a)}};
    for (u64 n : std::vector<u64>{1, 2, random_n}) {
      for (auto [w, h] : shapes) {
        const double area = static_cast<double>(w) * static_cast<double>(h);
        small_area += area <= static_cast<double>(a);
        large_area += area >= big;
        const MomentReport d = second_moment_direct(n, a, w, h, MomentDomain::kFullTorusQ2);
        const double s = second_moment_spectral(n, a, w, h);
        const double rel = std::abs(s - static_cast<double>(d.sum_squares)) / static_cast<double>(d.sum_squares);
        worst = std::max(worst, rel);
        ++cases;
      }
    }
  }
  const bool pass = worst <= 1e-6 && small_area > 0 && large_area > 0;
  return {pass, fmt("%d cases (%d with wh <= a, %d with wh >= a^1.5), max relative error %.2e", cases, small_area,
                    large_area, worst)};
}

// 4. Exhaustive Weil bound.
Outcome weil_bound_check() {
  u64 checked = 0, violations = 0;
  double tightest = 0;
  for (u64 a = 2; a <= 200; ++a) {
    const KloostermanKernel k(a);
    std::vector<std::complex<double>> row;
    for (u64 n = 0; n < a; ++n) {
      k.sums_over_m(static_cast<i64>(n), row);
      for (u64 m = 0; m < a; ++m) {
        const double bound = weil_bound(static_cast<i64>(m), static_cast<i64>(n), a);
        const double mag = std::abs(row[m]);
        violations += mag > bound + 1e-6;
        tightest = std::max(tightest, mag / bound);
        ++checked;
      }
    }
  }
  return {violations == 0, fmt("%llu triples, %llu violations, max |S|/bound %.4f",
                               static_cast<unsigned long long>(checked), static_cast<unsigned long long>(violations),
                               tightest)};
}

// 5. Cell counts of random partitions sum to phi(a).
Outcome count_conservation() {
  SplitMix64 rng(0xC0DE);
  int ok = 0;
  const int cases = 100;
  for (int t = 0; t < cases; ++t) {
    const u64 a = rng.uniform_in(2, 10000);
    u64 n = rng.uniform_in(1, 1ULL << 40);
    while (gcd(n, a) != 1) ++n;
    const u64 w = rng.uniform_in(1, a);
    const u64 h = rng.uniform_in((a + 63) / 64, a);
    const Grid g = make_grid(a, w, h);
    u64 total = 0;
    for (u64 i = 0; i < g.cols; ++i) {
      for (u64 j = 0; j < g.rows; ++j) total += std::get<u64>(count_in_rect(n, a, g.cell_rect(i, j)));
    }
    const MomentReport r = second_moment_direct(n, a, w, h, MomentDomain::kFundamentalSquare);
    ok += total == euler_phi(a) && r.sum_counts == euler_phi(a) &&
          r.full_sum_counts + r.edge_remainder == euler_phi(a);
  }
  return {ok == cases, fmt("%d/%d partitions conserve phi(a)", ok, cases)};
}

// 6. Growth of the square-domain second moment with sqrt(a) cells.
Outcome second_moment_growth() {
  std::vector<double> xs, ys;
  for (int e = 10; e <= 20; ++e) {
    const u64 a = next_prime((1ULL << e) + 3);
    const u64 b = coprime_adjust(ceil_sqrt(a), a);
    const MomentReport r = second_moment_direct(1, a, b, b, MomentDomain::kFundamentalSquare);
    xs.push_back(std::log(static_cast<double>(a)));
    ys.push_back(std::log(static_cast<double>(r.sum_squares)));
  }
  const double slope = oracle::slope(xs, ys);
  return {slope <= 1.15, fmt("11 primes 2^10..2^20, slope %.3f (target <= 1.15)", slope)};
}

// 7. Rectangle-count deviation growth and large-rectangle ratios.
Outcome equidistribution() {
  SplitMix64 rng(0xE9D1);
  std::string detail;
  bool pass = true;
  u64 large = 0, within = 0;
  u64 coprime_n = rng.uniform_in(3, 1ULL << 40) | 1;
  for (u64 n : std::vector<u64>{1, coprime_n}) {
    std::vector<double> xs, ys;
    for (int e = 10; e <= 17; ++e) {
      const u64 a = 1ULL << e;
      const DeviationReport rep = deviation_scan(n, a, 200, 1000 + e, 0);
      xs.push_back(std::log(static_cast<double>(a)));
      ys.push_back(std::log(rep.max_abs));
      for (const DeviationTrial& t : rep.trials) {
        if (static_cast<double>(t.rect.area()) < std::pow(static_cast<double>(a), 1.6)) continue;
        ++large;
        const double ratio = static_cast<double>(t.count) / t.expected;
        within += ratio >= 0.5 && ratio <= 2.0;
      }
    }
    const double slope = oracle::slope(xs, ys);
    pass &= slope <= 0.75;
    detail += fmt("N=%llu slope %.3f; ", static_cast<unsigned long long>(n), slope);
  }
  const double frac = large ? static_cast<double>(within) / static_cast<double>(large) : 0.0;
  pass &= large > 0 && frac >= 0.99;
  return {pass, detail + fmt("area >= a^1.6: %llu/%llu ratios in [0.5, 2] (%.4f)", static_cast<unsigned long long>(within),
                             static_cast<unsigned long long>(large), frac)};
}

// 8. Strip vs full mode, batch vs single inverses, driver vs sieve.
Outcome oracle_equivalence() {
  SplitMix64 rng(0x0AC1E);
  int strip_ok = 0;
  const int strip_cases = 1000;
  for (int t = 0; t < strip_cases; ++t) {
    const u64 n = rng.uniform_in(1'000'000, 1'000'000'000ULL);
    SearchStats fs, ss;
    const auto full = hide_seek_general(n, false, &fs);
    const auto strip = hide_seek_general(n, true, &ss);
    bool same = full == strip && fs.pairs_checked == ss.pairs_checked;
    const u64 m = rng.uniform_in(2, 10000);
    u64 k = n;
    while (gcd(k, m) != 1) ++k;
    auto all = std::get<SolutionSet>(solve_all(k, m)).points;
    std::vector<HyperbolaPoint> joined;
    for (u64 x0 = 0; x0 < m;) {
      const u64 width = rng.uniform_in(1, m);
      auto part = std::get<std::vector<HyperbolaPoint>>(solve_strip(k, m, x0, width));
      joined.insert(joined.end(), part.begin(), part.end());
      x0 += width;
    }
    std::sort(all.begin(), all.end());
    std::sort(joined.begin(), joined.end());
    same &= all == joined;
    strip_ok += same;
  }

  u64 inverse_mismatch = 0;
  for (u64 m = 2; m <= 10000; ++m) {
    const InverseTable table = batch_inverses(m);
    for (u64 x = 0; x < m; ++x) {
      const auto single = mod_inv(x, m);
      if (single.has_value() != table.contains(x) || (single && *single != table.at(x))) ++inverse_mismatch;
    }
  }

  const auto spf = oracle::spf_sieve(1'000'000);
  u64 factor_mismatch = 0;
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const FactorResult r = factor(n);
    if (n == 1) {
      factor_mismatch += r.kind != FactorKind::kUnit;
    } else if (spf[n] == n) {
      factor_mismatch += r.kind != FactorKind::kPrime;
    } else {
      factor_mismatch += r.kind != FactorKind::kSplit || r.split->u != spf[n];
    }
  }
  const bool pass = strip_ok == strip_cases && inverse_mismatch == 0 && factor_mismatch == 0;
  return {pass, fmt("strip==full %d/%d, inverse mismatches %llu (m <= 1e4), factor mismatches %llu (N <= 1e6)",
                    strip_ok, strip_cases, static_cast<unsigned long long>(inverse_mismatch),
                    static_cast<unsigned long long>(factor_mismatch))};
}

// 9. Planted polynomial instances.
Outcome polysearch_planted() {
  SplitMix64 rng(0x9017);
  int recovered = 0, agree = 0, total = 0, d1 = 0;
  for (u64 d : std::vector<u64>{1, 2}) {
    for (int t = 0; t < 100; ++t) {
      u64 a = 0, n = 0;
      std::vector<u64> u(d + 1), v(d + 1);
      while (true) {
        a = rng.uniform_in(d + 3, 60);
        for (u64 i = 0; i <= d; ++i) {
          u[i] = rng.uniform_below(a);
          v[i] = rng.uniform_below(a);
        }
        u[d] = rng.uniform_in(1, a - 1);
        v[d] = rng.uniform_in(1, a - 1);
        const u128 prod = eval_poly(u, a) * eval_poly(v, a);
        if (prod > 10'000'000) continue;
        n = static_cast<u64>(prod);
        bool coprime = true;
        for (u64 delta = 0; delta <= d; ++delta) coprime &= gcd(n, a - delta) == 1;
        if (coprime) break;
      }
      ++total;
      const auto inst = std::get<PolyInstance>(build_instance(n, a, d));
      const auto found = poly_search(inst);
      recovered += std::find(found.begin(), found.end(), PolyCoefficients{u, v}) != found.end();
      if (d == 1) {
        ++d1;
        const bool poly = factor_via_poly(n, a, 1).has_value();
        const bool pair = pair_search(n, {a, a, a, false}, 1, 1).has_value();
        agree += poly == pair;
      }
    }
  }
  return {recovered == total && agree == d1,
          fmt("planted recovered %d/%d, degree-one agreement with pair search %d/%d", recovered, total, agree, d1)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "factoring soundness and completeness", factoring_correctness},
      {2, "runtime scaling exponent", runtime_scaling},
      {3, "spectral identity", spectral_identity},
      {4, "Weil bound", weil_bound_check},
      {5, "count conservation", count_conservation},
      {6, "second-moment growth", second_moment_growth},
      {7, "equidistribution", equidistribution},
      {8, "oracle equivalence", oracle_equivalence},
      {9, "polynomial search", polysearch_planted},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %d %s: %s | %s | %.1f s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
