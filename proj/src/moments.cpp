#include "hideseek/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hideseek/grid.hpp"
#include "hideseek/parallel.hpp"

namespace hideseek {

namespace {

void require_coprime(u64 n, u64 a) {
  if (a < 2) throw std::invalid_argument("modulus a must be >= 2");
  if (gcd(n, a) != 1) {
    throw std::invalid_argument("N and a share the factor " + std::to_string(gcd(n, a)));
  }
}

u64 checked_u64(u128 v, const char* what) {
  if (v >> 64) throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return static_cast<u64>(v);
}

}  // namespace

KloostermanKernel::KloostermanKernel(u64 a) : a_(a) {
  if (a < 2) throw std::invalid_argument("kloosterman: modulus must be >= 2");
  InverseTable table(a);
  units_ = table.units();
  inverses_.reserve(units_.size());
  for (u64 x : units_) inverses_.push_back(table.at(x));
  cos_.resize(a);
  sin_.resize(a);
  for (u64 t = 0; t < a; ++t) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(a);
    cos_[t] = std::cos(angle);
    sin_[t] = std::sin(angle);
  }
}

u64 KloostermanKernel::reduce(i64 v) const {
  const i128 r = static_cast<i128>(v) % static_cast<i128>(a_);
  return static_cast<u64>(r < 0 ? r + a_ : r);
}

std::complex<double> KloostermanKernel::sum(i64 m, i64 n) const {
  const u64 mm = reduce(m), nn = reduce(n);
  double re = 0, im = 0;
  for (std::size_t k = 0; k < units_.size(); ++k) {
    const u64 t = (mul_mod(mm, units_[k], a_) + mul_mod(nn, inverses_[k], a_)) % a_;
    re += cos_[t];
    im += sin_[t];
  }
  return {re, im};
}

void KloostermanKernel::sums_over_m(i64 n, std::vector<std::complex<double>>& out) const {
  const u64 nn = reduce(n);
  std::vector<u64> phase(units_.size());
  for (std::size_t k = 0; k < units_.size(); ++k) phase[k] = mul_mod(nn, inverses_[k], a_);
  out.assign(a_, {});
  for (u64 m = 0; m < a_; ++m) {
    double re = 0, im = 0;
    for (std::size_t k = 0; k < units_.size(); ++k) {
      const u64 t = phase[k];
      re += cos_[t];
      im += sin_[t];
      u64 next = t + units_[k];
      phase[k] = next >= a_ ? next - a_ : next;
    }
    out[m] = {re, im};
  }
}

KloostermanValue kloosterman(i64 m, i64 n, u64 a) {
  const std::complex<double> s = KloostermanKernel(a).sum(m, n);
  return {m, n, a, s.real(), s.imag()};
}

double weil_bound(i64 m, i64 n, u64 a) {
  auto mag = [](i64 v) { return v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v); };
  const u64 g = gcd(gcd(mag(m), mag(n)), a);
  return static_cast<double>(divisor_count(a)) * std::sqrt(static_cast<double>(g)) *
         std::sqrt(static_cast<double>(a));
}

double expected_count(const Rect& r, u64 a) {
  validate_rect(r, a);
  const double ad = static_cast<double>(a);
  return static_cast<double>(r.area()) * static_cast<double>(euler_phi(a)) / (ad * ad);
}

Rect random_rect(SplitMix64& rng, u64 a) {
  if (a < 1) throw std::invalid_argument("random_rect: a must be >= 1");
  auto axis = [&](u64& lo, u64& hi) {
    const u64 i = rng.uniform_below(a + 1);
    u64 j = rng.uniform_below(a + 1);
    while (j == i) j = rng.uniform_below(a + 1);
    lo = std::min(i, j);
    hi = std::max(i, j);
  };
  Rect r;
  axis(r.x1, r.x2);
  axis(r.y1, r.y2);
  return r;
}

DeviationReport deviation_scan(u64 n, u64 a, u64 trials, u64 seed, unsigned threads) {
  require_coprime(n, a);
  DeviationReport rep;
  rep.n = n;
  rep.a = a;
  rep.seed = seed;
  SplitMix64 rng(seed);
  rep.trials.resize(trials);
  for (auto& t : rep.trials) t.rect = random_rect(rng, a);
  parallel_for(trials, threads, [&](std::size_t i) {
    DeviationTrial& t = rep.trials[i];
    t.count = std::get<u64>(count_in_rect(n, a, t.rect));
    t.expected = expected_count(t.rect, a);
  });
  double total = 0;
  for (const auto& t : rep.trials) {
    const double d = std::abs(t.deviation());
    rep.max_abs = std::max(rep.max_abs, d);
    total += d;
  }
  rep.mean_abs = trials ? total / static_cast<double>(trials) : 0.0;
  return rep;
}

std::string_view to_string(MomentDomain d) {
  return d == MomentDomain::kFundamentalSquare ? "square" : "torus";
}

namespace {

void fill_common(MomentReport& r, u64 n, u64 a, u64 w, u64 h, MomentDomain domain, u64 phi) {
  r.n = n;
  r.a = a;
  r.cell_w = w;
  r.cell_h = h;
  r.domain = domain;
  const double ad = static_cast<double>(a), phid = static_cast<double>(phi);
  const double wd = static_cast<double>(w), hd = static_cast<double>(h);
  r.expected_mean_cell = phid * wd * hd / (ad * ad);
  r.k0_term = hd * hd * wd * wd * phid * phid / (ad * ad);
}

MomentReport square_moment(u64 n, u64 a, u64 w, u64 h) {
  const Grid g = make_grid(a, w, h);
  const SolutionSet set = std::get<SolutionSet>(solve_all(n, a));
  CellTally tally(g);
  for (const HyperbolaPoint& p : set.points) tally.add(p);

  MomentReport r;
  fill_common(r, n, a, w, h, MomentDomain::kFundamentalSquare, set.points.size());
  r.cells = g.cell_count();
  r.sum_counts = tally.total();
  u128 squares = 0, full_squares = 0;
  for (u64 i = 0; i < g.cols; ++i) {
    for (u64 j = 0; j < g.rows; ++j) {
      const u64 c = tally.count(i, j);
      squares += static_cast<u128>(c) * c;
      if ((i + 1) * w <= a && (j + 1) * h <= a) {
        ++r.full_cells;
        r.full_sum_counts += c;
        full_squares += static_cast<u128>(c) * c;
      }
    }
  }
  r.sum_squares = checked_u64(squares, "sum_squares");
  r.full_sum_squares = checked_u64(full_squares, "full_sum_squares");
  r.edge_remainder = set.points.size() - r.full_sum_counts;
  return r;
}

// Every cell of the wa x ha rectangle is a cyclic window [s, s+w) x [t, t+h)
// of the torus, and since gcd(w, a) = gcd(h, a) = 1 each (s, t) occurs once.
// Slide the row window over t and the column window over s.
MomentReport torus_moment(u64 n, u64 a, u64 w, u64 h) {
  if (gcd(w, a) != 1 || gcd(h, a) != 1) {
    throw std::invalid_argument("torus second moment needs gcd(w, a) = gcd(h, a) = 1");
  }
  const InverseTable table(a);
  const u64 target = n % a;
  std::vector<u64> x_of_y(a, a);  // a marks "no point on this row"
  for (u64 y : table.units()) x_of_y[y] = mul_mod(target, table.at(y), a);

  const u64 qw = w / a, rw = w % a, qh = h / a, rh = h % a;
  std::vector<u64> cnt(a, 0);
  for (u64 y : table.units()) cnt[x_of_y[y]] = qh + (y < rh ? 1 : 0);
  u64 total = 0;
  for (u64 c : cnt) total += c;

  u128 squares = 0;
  for (u64 t = 0; t < a; ++t) {
    u64 window = 0;
    for (u64 d = 0; d < rw; ++d) window += cnt[d];
    for (u64 s = 0; s < a; ++s) {
      const u128 c = static_cast<u128>(qw) * total + window;
      squares += c * c;
      if (rw > 0) window = window - cnt[s] + cnt[(s + rw) % a];
    }
    if (rh > 0) {
      if (x_of_y[t] != a) {
        --cnt[x_of_y[t]];
        --total;
      }
      const u64 enter = (t + rh) % a;
      if (x_of_y[enter] != a) {
        ++cnt[x_of_y[enter]];
        ++total;
      }
    }
  }

  MomentReport r;
  fill_common(r, n, a, w, h, MomentDomain::kFullTorusQ2, table.size());
  r.cells = checked_u64(static_cast<u128>(a) * a, "cells");
  r.sum_counts = checked_u64(static_cast<u128>(w) * h * table.size(), "sum_counts");
  r.sum_squares = checked_u64(squares, "sum_squares");
  r.full_cells = r.cells;
  r.full_sum_counts = r.sum_counts;
  r.full_sum_squares = r.sum_squares;
  r.edge_remainder = 0;
  return r;
}

}  // namespace

MomentReport second_moment_direct(u64 n, u64 a, u64 cell_w, u64 cell_h, MomentDomain domain) {
  require_coprime(n, a);
  if (cell_w == 0 || cell_h == 0) throw std::invalid_argument("cell sides must be >= 1");
  return domain == MomentDomain::kFundamentalSquare ? square_moment(n, a, cell_w, cell_h)
                                                    : torus_moment(n, a, cell_w, cell_h);
}

double fejer_factor(u64 k, u64 len, u64 a) {
  const u64 r = k % a;
  if (r == 0) return static_cast<double>(len) * static_cast<double>(len);
  const double ad = static_cast<double>(a);
  const double num = std::sin(std::numbers::pi * static_cast<double>(mul_mod(r, len, a)) / ad);
  const double den = std::sin(std::numbers::pi * static_cast<double>(r) / ad);
  return (num * num) / (den * den);
}

SpectralMoment second_moment_spectral_detail(u64 n, u64 a, u64 cell_w, u64 cell_h,
                                             unsigned threads) {
  require_coprime(n, a);
  if (gcd(cell_w, a) != 1 || gcd(cell_h, a) != 1) {
    throw std::invalid_argument("spectral second moment needs gcd(w, a) = gcd(h, a) = 1");
  }
  const KloostermanKernel kernel(a);
  std::vector<double> fw(a), fh(a);
  for (u64 k = 0; k < a; ++k) {
    fw[k] = fejer_factor(k, cell_w, a);
    fh[k] = fejer_factor(k, cell_h, a);
  }
  const u64 nmod = n % a;
  std::vector<double> per_k(a, 0.0);
  parallel_for(a, threads, [&](std::size_t k) {
    // -N k mod a
    const u64 nk = mul_mod(nmod, k, a);
    const i64 second = static_cast<i64>(nk == 0 ? 0 : a - nk);
    std::vector<std::complex<double>> s;
    kernel.sums_over_m(second, s);
    double inner = 0;
    for (u64 m = 0; m < a; ++m) inner += std::norm(s[(a - m) % a]) * fw[m];
    per_k[k] = inner * fh[k];
  });
  const double a2 = static_cast<double>(a) * static_cast<double>(a);
  SpectralMoment out;
  for (double v : per_k) out.total += v;
  out.total /= a2;
  out.k0_slice = per_k[0] / a2;
  return out;
}

u64 coprime_adjust(u64 start, u64 a) {
  if (a < 2 || start == 0) throw std::invalid_argument("coprime_adjust: need start >= 1, a >= 2");
  for (u64 b = start;; ++b) {
    if (gcd(b, a) == 1) return b;
    if (b - start >= 2 * a) throw std::logic_error("coprime_adjust: no unit found");
  }
}

}  // namespace hideseek
