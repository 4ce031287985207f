#pragma once

// Hide and Seek factoring.
//
// With a near N^{1/3}, the residues of the factors U = u1*a + u0 and
// V = v1*a + v0 give two solutions of xy = N, one mod a and one mod a-1,
// (u0, v0) and (u0 + u1, v0 + v1) reduced mod a-1. Both sit within a
// couple of grid cells of each other, so scanning pairs of points in
// neighbouring cells and testing each reconstruction recovers U and V.

#include <optional>
#include <string_view>

#include "hideseek/grid.hpp"

namespace hideseek {

/// Below this, the driver factors by trial division alone.
inline constexpr u64 kHideSeekMinN = 1'000'000;

/// n == u * v with 1 < u <= v < n.
struct Factorization {
  u64 n = 0;
  u64 u = 0;
  u64 v = 0;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Normalized split of n by the divisor d, or nullopt when d is trivial or
/// does not divide n.
std::optional<Factorization> make_factorization(u64 n, u64 d);

/// p solves xy = N mod a, q solves xy = N mod a-1.
struct CandidateFrame {
  u64 a = 0;
  HyperbolaPoint p;
  HyperbolaPoint q;
  bool col_wrap = false;
  bool row_wrap = false;
};

/// Rebuilds (u1*a + u0)(v1*a + v0) from the frame for every digit
/// difference compatible with the mod a-1 wraparound and tests it against n.
std::optional<Factorization> check_candidate(u64 n, u64 a, const CandidateFrame& frame);

struct VariantConfig {
  u64 a = 0;
  u64 w = 0;
  u64 h = 0;
  bool strip_mode = false;
};

struct SearchStats {
  u64 a = 0;
  u64 w = 0;
  u64 h = 0;
  u64 points_enumerated = 0;
  u64 pairs_checked = 0;
  bool gcd_shortcut = false;
};

/// One full scan at a fixed base modulus a: gcd shortcuts for a and a-1,
/// then every neighbouring pair on make_grid(a, cfg.w, cfg.h) within
/// dx_cells columns and dy_cells rows. Requires a >= 3.
std::optional<Factorization> pair_search(u64 n, const VariantConfig& cfg, u64 dx_cells,
                                         u64 dy_cells, SearchStats* stats = nullptr);

/// Balanced case U <= V < 2U: a = ceil((2N)^{1/3}), square cells of side
/// ceil(sqrt(a)), radius one.
std::optional<Factorization> hide_seek_balanced(u64 n, bool strip_mode = false,
                                                SearchStats* stats = nullptr);

/// General case: a = ceil(N^{1/3}); rectangles of width w = 2, 4, 8, ...
/// and height ceil(a/w), one column and two rows of neighbours.
std::optional<Factorization> hide_seek_general(u64 n, bool strip_mode = false,
                                               SearchStats* stats = nullptr);

/// Split by the smallest prime divisor <= bound, if any.
std::optional<Factorization> trial_division(u64 n, u64 bound);

enum class FactorMethod { kAuto, kBalanced, kGeneral, kTrialOnly };
enum class FactorKind { kSplit, kPrime, kUnit, kNotFound };

struct FactorOptions {
  FactorMethod method = FactorMethod::kAuto;
  bool strip_mode = false;
};

struct FactorResult {
  FactorKind kind = FactorKind::kNotFound;
  std::optional<Factorization> split;
  /// "unit", "prime", "trial", "gcd", "balanced", "general" or "none".
  std::string_view route = "none";
  SearchStats stats;
};

/// Top-level driver. Every returned split has been re-verified by
/// multiplication. Throws std::invalid_argument for n == 0.
FactorResult factor(u64 n, const FactorOptions& options = {});

std::string_view to_string(FactorMethod m);

}  // namespace hideseek
