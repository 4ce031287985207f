#ifndef HIDESEEK_H
#define HIDESEEK_H

/* C interface to the hideseek library.
 *
 * Every call that can fail returns an hs_status. Functions taking an
 * hs_context record a human-readable message for the most recent failure,
 * retrievable with hs_last_error. A context must not be used from two
 * threads at once; separate contexts are independent. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HS_API __declspec(dllexport)
#else
#define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
  HS_OK = 0,
  HS_NOT_FOUND = 1,
  HS_COMMON_FACTOR = 2,
  HS_INVALID_ARGUMENT = 3,
  HS_OUT_OF_RANGE = 4,
  HS_TOO_LARGE = 5,
  HS_OVERFLOW = 6,
  HS_NO_MEMORY = 7,
  HS_INTERNAL = 8
} hs_status;

HS_API const char* hs_status_string(hs_status status);
HS_API const char* hs_version(void);

typedef struct hs_context hs_context;

HS_API hs_context* hs_context_create(void);
HS_API void hs_context_destroy(hs_context* ctx);
/* 0 selects one worker per hardware thread. */
HS_API hs_status hs_context_set_threads(hs_context* ctx, unsigned threads);
HS_API unsigned hs_context_threads(const hs_context* ctx);
/* Empty string when the last call succeeded. Owned by the context. */
HS_API const char* hs_last_error(const hs_context* ctx);

/* ---- arithmetic ---- */

HS_API int hs_is_prime(uint64_t n);
/* Smallest b >= start with gcd(b, a) = 1. */
HS_API hs_status hs_coprime_adjust(hs_context* ctx, uint64_t start, uint64_t a, uint64_t* out);

/* ---- factoring ---- */

typedef enum hs_factor_method {
  HS_METHOD_AUTO = 0,
  HS_METHOD_BALANCED = 1,
  HS_METHOD_GENERAL = 2,
  HS_METHOD_TRIAL_ONLY = 3
} hs_factor_method;

typedef enum hs_factor_outcome {
  HS_OUTCOME_SPLIT = 0,
  HS_OUTCOME_PRIME = 1,
  HS_OUTCOME_UNIT = 2,
  HS_OUTCOME_NOT_FOUND = 3
} hs_factor_outcome;

typedef struct hs_factor_report {
  uint64_t n;
  uint64_t u; /* u <= v, u * v == n when outcome is SPLIT */
  uint64_t v;
  hs_factor_outcome outcome;
  char route[16]; /* unit, prime, trial, gcd, balanced, general, none */
  uint64_t a;
  uint64_t w;
  uint64_t h;
  uint64_t points_enumerated;
  uint64_t pairs_checked;
  int gcd_shortcut;
} hs_factor_report;

/* HS_OK whenever the driver ran to completion, including prime, unit and
 * not-found outcomes; inspect report->outcome. */
HS_API hs_status hs_factor(hs_context* ctx, uint64_t n, hs_factor_method method, int strip_mode,
                           hs_factor_report* report);

/* ---- modular hyperbola ---- */

typedef struct hs_solution_set hs_solution_set;

/* All (x, y) in [0, m)^2 with xy = n (mod m), sorted by x. On
 * HS_COMMON_FACTOR *common_factor receives gcd(n, m) and *out is NULL. */
HS_API hs_status hs_solve(hs_context* ctx, uint64_t n, uint64_t m, hs_solution_set** out,
                          uint64_t* common_factor);
/* Points with x in [x0, min(x0 + width, m)). */
HS_API hs_status hs_solve_strip(hs_context* ctx, uint64_t n, uint64_t m, uint64_t x0, uint64_t width,
                                hs_solution_set** out, uint64_t* common_factor);
HS_API size_t hs_solution_set_size(const hs_solution_set* set);
HS_API hs_status hs_solution_set_point(const hs_solution_set* set, size_t index, uint64_t* x,
                                       uint64_t* y);
HS_API void hs_solution_set_destroy(hs_solution_set* set);

/* Points in [x1, x2) x [y1, y2) with 0 <= x1 < x2 <= m, likewise for y. */
HS_API hs_status hs_count_in_rect(hs_context* ctx, uint64_t n, uint64_t m, uint64_t x1, uint64_t x2,
                                  uint64_t y1, uint64_t y2, uint64_t* count,
                                  uint64_t* common_factor);

/* ---- moments ---- */

typedef enum hs_moment_domain { HS_DOMAIN_SQUARE = 0, HS_DOMAIN_TORUS = 1 } hs_moment_domain;

typedef struct hs_moment_report {
  uint64_t n;
  uint64_t a;
  uint64_t cell_w;
  uint64_t cell_h;
  hs_moment_domain domain;
  uint64_t cells;
  uint64_t sum_counts;
  uint64_t sum_squares;
  double expected_mean_cell;
  double k0_term;
  int has_spectral;
  double spectral_value;
  double spectral_k0;
  uint64_t full_cells;
  uint64_t full_sum_counts;
  uint64_t full_sum_squares;
  uint64_t edge_remainder;
} hs_moment_report;

/* with_spectral requires the torus domain. */
HS_API hs_status hs_second_moment(hs_context* ctx, uint64_t n, uint64_t a, uint64_t cell_w,
                                  uint64_t cell_h, hs_moment_domain domain, int with_spectral,
                                  hs_moment_report* report);

HS_API hs_status hs_kloosterman(hs_context* ctx, int64_t m, int64_t n, uint64_t a, double* value,
                                double* imag_residual, double* bound);

typedef struct hs_deviation_trial {
  uint64_t x1, x2, y1, y2;
  uint64_t count;
  double expected;
} hs_deviation_trial;

typedef struct hs_deviation_summary {
  uint64_t n;
  uint64_t a;
  uint64_t seed;
  uint64_t trials;
  double max_abs;
  double mean_abs;
} hs_deviation_summary;

/* trials_out may be NULL; otherwise it must hold `trials` entries. */
HS_API hs_status hs_deviation_scan(hs_context* ctx, uint64_t n, uint64_t a, uint64_t trials,
                                   uint64_t seed, hs_deviation_summary* summary,
                                   hs_deviation_trial* trials_out);

/* ---- polynomial digit search ---- */

/* 0 for max_points selects the library default. HS_NOT_FOUND when no
 * exact-degree split exists, HS_TOO_LARGE past the point budget. */
HS_API hs_status hs_factor_via_poly(hs_context* ctx, uint64_t n, uint64_t a, uint64_t d,
                                    uint64_t max_points, uint64_t* u, uint64_t* v);

/* ---- sampling ---- */

/* Draws a semiprime n = p * q in [nmin, nmax] with p <= q, advancing the
 * generator state in place. balanced != 0 additionally enforces q < 2p. */
HS_API hs_status hs_random_semiprime(hs_context* ctx, uint64_t* rng_state, uint64_t nmin,
                                     uint64_t nmax, int balanced, uint64_t* n, uint64_t* p,
                                     uint64_t* q);

#ifdef __cplusplus
}
#endif

#endif
