#pragma once

// Kloosterman sums, rectangle-count statistics and second moments of the
// modular hyperbola.
//
// e(z) = exp(2*pi*i*z) and S(m, n, a) = sum over units x of e((m x + n x^-1)/a).
// The spectral second moment over the wa x ha torus is
//   (1/a^2) sum_{k,m} |S(-m, -Nk, a)|^2 F_w(m) F_h(k),
//   F_L(k) = |(e(kL/a) - 1) / (e(k/a) - 1)|^2   (= L^2 when k = 0 mod a),
// and equals the direct count sum over all a^2 cells exactly when
// gcd(w, a) = gcd(h, a) = 1.

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "hideseek/random.hpp"
#include "hideseek/solutions.hpp"

namespace hideseek {

/// Precomputed units, inverses and a trigonometric table for one modulus.
class KloostermanKernel {
 public:
  explicit KloostermanKernel(u64 a);

  u64 modulus() const { return a_; }
  std::complex<double> sum(i64 m, i64 n) const;
  /// out[m] = S(m, n, a) for every m in [0, a).
  void sums_over_m(i64 n, std::vector<std::complex<double>>& out) const;

 private:
  u64 reduce(i64 v) const;

  u64 a_;
  std::vector<u64> units_;
  std::vector<u64> inverses_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

struct KloostermanValue {
  i64 m = 0;
  i64 n = 0;
  u64 a = 0;
  double value = 0;
  double imag_residual = 0;
};

KloostermanValue kloosterman(i64 m, i64 n, u64 a);

/// tau(a) * gcd(|m|, |n|, a)^{1/2} * a^{1/2}.
double weil_bound(i64 m, i64 n, u64 a);

/// area(r) * phi(a) / a^2.
double expected_count(const Rect& r, u64 a);

struct DeviationTrial {
  Rect rect;
  u64 count = 0;
  double expected = 0;
  double deviation() const { return static_cast<double>(count) - expected; }
};

struct DeviationReport {
  u64 n = 0;
  u64 a = 0;
  u64 seed = 0;
  double max_abs = 0;
  double mean_abs = 0;
  std::vector<DeviationTrial> trials;
};

/// Random rectangle drawn as in deviation_scan: for each axis, two distinct
/// values uniform in [0, a], sorted.
Rect random_rect(SplitMix64& rng, u64 a);

/// |count_in_rect - expected_count| over `trials` random rectangles.
/// Deterministic in seed. Requires gcd(n, a) == 1.
DeviationReport deviation_scan(u64 n, u64 a, u64 trials, u64 seed, unsigned threads = 1);

enum class MomentDomain { kFundamentalSquare, kFullTorusQ2 };

std::string_view to_string(MomentDomain d);

struct MomentReport {
  u64 n = 0;
  u64 a = 0;
  u64 cell_w = 0;
  u64 cell_h = 0;
  MomentDomain domain = MomentDomain::kFundamentalSquare;
  u64 cells = 0;
  u64 sum_counts = 0;
  u64 sum_squares = 0;
  double expected_mean_cell = 0;  // phi(a) * w * h / a^2
  double k0_term = 0;             // h^2 w^2 phi(a)^2 / a^2
  std::optional<double> spectral_value;
  std::optional<double> spectral_k0;  // exact k = 0 slice of the spectral sum
  // Untruncated cells only (square domain); the rest is the edge remainder.
  u64 full_cells = 0;
  u64 full_sum_counts = 0;
  u64 full_sum_squares = 0;
  u64 edge_remainder = 0;
};

/// Direct second moment. The square domain tiles [0, a)^2 with truncated
/// edge cells; the torus domain covers all a^2 cells of the wa x ha
/// rectangle and needs gcd(w, a) = gcd(h, a) = 1. Requires gcd(n, a) = 1.
MomentReport second_moment_direct(u64 n, u64 a, u64 cell_w, u64 cell_h, MomentDomain domain);

struct SpectralMoment {
  double total = 0;
  double k0_slice = 0;
};

SpectralMoment second_moment_spectral_detail(u64 n, u64 a, u64 cell_w, u64 cell_h,
                                             unsigned threads = 1);

inline double second_moment_spectral(u64 n, u64 a, u64 cell_w, u64 cell_h, unsigned threads = 1) {
  return second_moment_spectral_detail(n, a, cell_w, cell_h, threads).total;
}

/// F_L(k) above, with the exact limit L^2 at k = 0 mod a.
double fejer_factor(u64 k, u64 len, u64 a);

/// Smallest b >= start with gcd(b, a) = 1.
u64 coprime_adjust(u64 start, u64 a);

}  // namespace hideseek
