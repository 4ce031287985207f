#include "hideseek/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hideseek {

std::optional<Factorization> make_factorization(u64 n, u64 d) {
  if (d <= 1 || d >= n || n % d != 0) return std::nullopt;
  u64 e = n / d;
  Factorization f{n, std::min(d, e), std::max(d, e)};
  if (static_cast<u128>(f.u) * f.v != n) return std::nullopt;
  return f;
}

namespace {

// Digit differences in [0, a) compatible with q = p + diff reduced mod a-1,
// allowing up to two wraps of the mod a-1 coordinate.
int digit_candidates(u64 from, u64 to, u64 a, u64 (&out)[3]) {
  int count = 0;
  const i128 base = static_cast<i128>(to) - static_cast<i128>(from);
  for (int k = 0; k < 3; ++k) {
    const i128 d = base + static_cast<i128>(k) * (a - 1);
    if (d >= 0 && d < static_cast<i128>(a)) out[count++] = static_cast<u64>(d);
  }
  return count;
}

}  // namespace

std::optional<Factorization> check_candidate(u64 n, u64 a, const CandidateFrame& frame) {
  u64 u1s[3], v1s[3];
  const int nu = digit_candidates(frame.p.x, frame.q.x, a, u1s);
  const int nv = digit_candidates(frame.p.y, frame.q.y, a, v1s);
  for (int i = 0; i < nu; ++i) {
    const u128 u = static_cast<u128>(u1s[i]) * a + frame.p.x;
    if (u <= 1 || u >= n) continue;
    for (int j = 0; j < nv; ++j) {
      const u128 v = static_cast<u128>(v1s[j]) * a + frame.p.y;
      if (v <= 1 || u * v != n) continue;
      return make_factorization(n, static_cast<u64>(u));
    }
  }
  return std::nullopt;
}

namespace {

// gcd(a, N) and gcd(a-1, N); the smaller nontrivial factor wins.
std::optional<Factorization> gcd_shortcut(u64 n, u64 a) {
  std::optional<Factorization> best;
  for (u64 m : {a, a - 1}) {
    auto f = make_factorization(n, gcd(m, n));
    if (f && (!best || f->u < best->u)) best = f;
  }
  return best;
}

bool has_common_factor(u64 n, u64 a) { return gcd(a, n) != 1 || gcd(a - 1, n) != 1; }

using Column = std::vector<std::vector<HyperbolaPoint>>;

class PairScanner {
 public:
  PairScanner(u64 n, u64 a, bool strip_mode, SearchStats& stats)
      : n_(n), a_(a), strip_mode_(strip_mode), stats_(stats) {}

  std::optional<Factorization> scan(const Grid& g, u64 dx, u64 dy) {
    return strip_mode_ ? scan_strips(g, dx, dy) : scan_full(g, dx, dy);
  }

 private:
  std::optional<Factorization> scan_full(const Grid& g, u64 dx, u64 dy) {
    if (!base_) {
      base_ = std::get<SolutionSet>(solve_all(n_, a_));
      shifted_ = std::get<SolutionSet>(solve_all(n_, a_ - 1));
      stats_.points_enumerated += base_->points.size() + shifted_->points.size();
    }
    const CellCounts base = bucket(base_->points, g);
    const CellCounts shifted = bucket(shifted_->points, g);
    std::optional<Factorization> found;
    stats_.pairs_checked += neighbor_pairs(
        base, shifted, dx, dy, [&](const HyperbolaPoint& p, const HyperbolaPoint& q, WrapFlags w) {
          found = check_candidate(n_, a_, {a_, p, q, w.col, w.row});
          return found ? ScanControl::kStop : ScanControl::kContinue;
        });
    return found;
  }

  Column strip(const Grid& g, u64 modulus, u64 col) {
    Column rows(g.rows);
    const u64 x0 = col * g.cell_w;
    if (x0 >= modulus) return rows;
    auto pts = std::get<std::vector<HyperbolaPoint>>(solve_strip(n_, modulus, x0, g.cell_w));
    stats_.points_enumerated += pts.size();
    for (const HyperbolaPoint& p : pts) rows[p.y / g.cell_h].push_back(p);
    return rows;
  }

  // Same visiting order as neighbor_pairs, holding only the strips of the
  // current base column and its neighbours.
  std::optional<Factorization> scan_strips(const Grid& g, u64 dx, u64 dy) {
    std::vector<std::vector<NeighborLine>> row_nbrs(g.rows);
    for (u64 j = 0; j < g.rows; ++j) row_nbrs[j] = neighbor_rows(g, j, dy);

    std::map<u64, Column> cache;
    for (u64 i = 0; i < g.cols; ++i) {
      const std::vector<NeighborLine> col_nbrs = neighbor_columns(g, i, dx);
      std::erase_if(cache, [&](const auto& kv) {
        return std::none_of(col_nbrs.begin(), col_nbrs.end(),
                            [&](const NeighborLine& c) { return c.index == kv.first; });
      });
      for (const NeighborLine& c : col_nbrs) {
        if (!cache.contains(c.index)) cache.emplace(c.index, strip(g, a_ - 1, c.index));
      }
      const Column base = strip(g, a_, i);
      for (u64 j = 0; j < g.rows; ++j) {
        const auto& here = base[j];
        if (here.empty()) continue;
        for (const NeighborLine& c : col_nbrs) {
          const Column& other = cache.at(c.index);
          for (const NeighborLine& r : row_nbrs[j]) {
            const auto& there = other[r.index];
            for (const HyperbolaPoint& p : here) {
              for (const HyperbolaPoint& q : there) {
                ++stats_.pairs_checked;
                if (auto f = check_candidate(n_, a_, {a_, p, q, c.wrapped, r.wrapped})) return f;
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  u64 n_;
  u64 a_;
  bool strip_mode_;
  SearchStats& stats_;
  std::optional<SolutionSet> base_;
  std::optional<SolutionSet> shifted_;
};

}  // namespace

std::optional<Factorization> pair_search(u64 n, const VariantConfig& cfg, u64 dx_cells,
                                         u64 dy_cells, SearchStats* stats) {
  if (cfg.a < 3) throw std::invalid_argument("pair_search: modulus a must be >= 3");
  SearchStats local;
  SearchStats& s = stats ? *stats : local;
  s.a = cfg.a;
  s.w = cfg.w;
  s.h = cfg.h;
  if (has_common_factor(n, cfg.a)) {
    auto f = gcd_shortcut(n, cfg.a);
    s.gcd_shortcut = f.has_value();
    return f;
  }
  const Grid g = make_grid(cfg.a, cfg.w, cfg.h);
  PairScanner scanner(n, cfg.a, cfg.strip_mode, s);
  return scanner.scan(g, dx_cells, dy_cells);
}

std::optional<Factorization> hide_seek_balanced(u64 n, bool strip_mode, SearchStats* stats) {
  const u64 a = ceil_cbrt(static_cast<u128>(n) * 2);
  if (a < 3) return std::nullopt;
  const u64 b = ceil_sqrt(a);
  return pair_search(n, {a, b, b, strip_mode}, 1, 1, stats);
}

std::optional<Factorization> hide_seek_general(u64 n, bool strip_mode, SearchStats* stats) {
  SearchStats local;
  SearchStats& s = stats ? *stats : local;
  const u64 a = ceil_cbrt(n);
  if (a < 3) return std::nullopt;
  s.a = a;
  if (has_common_factor(n, a)) {
    auto f = gcd_shortcut(n, a);
    s.gcd_shortcut = f.has_value();
    return f;
  }
  PairScanner scanner(n, a, strip_mode, s);
  for (u64 w = 2; w <= a; w *= 2) {
    const u64 h = (a + w - 1) / w;
    s.w = w;
    s.h = h;
    if (auto f = scanner.scan(make_grid(a, w, h), 1, 2)) return f;
  }
  return std::nullopt;
}

std::optional<Factorization> trial_division(u64 n, u64 bound) {
  if (n < 2) throw std::invalid_argument("trial_division: n must be >= 2");
  const u64 limit = std::min(bound, isqrt(n));
  auto hit = [&](u64 d) { return d <= limit && n % d == 0; };
  if (hit(2)) return make_factorization(n, 2);
  if (hit(3)) return make_factorization(n, 3);
  for (u64 d = 5; d <= limit; d += 6) {
    if (hit(d)) return make_factorization(n, d);
    if (hit(d + 2)) return make_factorization(n, d + 2);
  }
  return std::nullopt;
}

namespace {

FactorResult split_result(std::optional<Factorization> f, std::string_view route,
                          const SearchStats& stats) {
  FactorResult r;
  r.stats = stats;
  if (f && static_cast<u128>(f->u) * f->v == f->n && f->u > 1 && f->u <= f->v) {
    r.kind = FactorKind::kSplit;
    r.split = f;
    r.route = stats.gcd_shortcut ? "gcd" : route;
  } else if (f) {
    throw std::logic_error("factor: unverified split");
  }
  return r;
}

FactorResult hide_seek_route(u64 n, const FactorOptions& options, bool balanced) {
  SearchStats stats;
  if (!balanced) {
    if (auto f = trial_division(n, ceil_cbrt(n))) return split_result(f, "trial", stats);
  }
  auto f = balanced ? hide_seek_balanced(n, options.strip_mode, &stats)
                    : hide_seek_general(n, options.strip_mode, &stats);
  return split_result(f, balanced ? "balanced" : "general", stats);
}

}  // namespace

FactorResult factor(u64 n, const FactorOptions& options) {
  if (n == 0) throw std::invalid_argument("factor: n must be >= 1");
  FactorResult r;
  if (n == 1) {
    r.kind = FactorKind::kUnit;
    r.route = "unit";
    return r;
  }
  const bool trial_only = options.method == FactorMethod::kTrialOnly ||
                          (options.method == FactorMethod::kAuto && n < kHideSeekMinN);
  if (trial_only) {
    if (auto f = trial_division(n, isqrt(n))) return split_result(f, "trial", {});
    r.kind = FactorKind::kPrime;
    r.route = "prime";
    return r;
  }
  if (is_prime(n)) {
    r.kind = FactorKind::kPrime;
    r.route = "prime";
    return r;
  }
  return hide_seek_route(n, options, options.method == FactorMethod::kBalanced);
}

std::string_view to_string(FactorMethod m) {
  switch (m) {
    case FactorMethod::kAuto: return "auto";
    case FactorMethod::kBalanced: return "balanced";
    case FactorMethod::kGeneral: return "general";
    case FactorMethod::kTrialOnly: return "trial";
  }
  return "?";
}

}  // namespace hideseek
