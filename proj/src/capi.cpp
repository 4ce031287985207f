#include "hideseek/hideseek.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "hideseek/factor.hpp"
#include "hideseek/moments.hpp"
#include "hideseek/polysearch.hpp"
#include "hideseek/random.hpp"
#include "hideseek/solutions.hpp"

struct hs_context {
  unsigned threads = 1;
  std::string last_error;
};

struct hs_solution_set {
  std::vector<hideseek::HyperbolaPoint> points;
};

namespace {

using namespace hideseek;

hs_status fail(hs_context* ctx, hs_status status, const char* what) {
  if (ctx) ctx->last_error = what;
  return status;
}

// Runs body() and translates exceptions into status codes.
template <class Body>
hs_status guarded(hs_context* ctx, Body&& body) {
  if (!ctx) return HS_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const TooLarge& e) {
    return fail(ctx, HS_TOO_LARGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, HS_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ctx, HS_OUT_OF_RANGE, e.what());
  } catch (const std::overflow_error& e) {
    return fail(ctx, HS_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, HS_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, HS_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, HS_INTERNAL, "unknown exception");
  }
}

hs_status common_factor(hs_context* ctx, const CommonFactor& cf, uint64_t* out) {
  if (out) *out = cf.divisor;
  ctx->last_error = "input shares the factor " + std::to_string(cf.divisor) + " with the modulus";
  return HS_COMMON_FACTOR;
}

FactorMethod to_method(hs_factor_method m) {
  switch (m) {
    case HS_METHOD_AUTO: return FactorMethod::kAuto;
    case HS_METHOD_BALANCED: return FactorMethod::kBalanced;
    case HS_METHOD_GENERAL: return FactorMethod::kGeneral;
    case HS_METHOD_TRIAL_ONLY: return FactorMethod::kTrialOnly;
  }
  throw std::invalid_argument("unknown factor method");
}

hs_factor_outcome to_outcome(FactorKind k) {
  switch (k) {
    case FactorKind::kSplit: return HS_OUTCOME_SPLIT;
    case FactorKind::kPrime: return HS_OUTCOME_PRIME;
    case FactorKind::kUnit: return HS_OUTCOME_UNIT;
    case FactorKind::kNotFound: break;
  }
  return HS_OUTCOME_NOT_FOUND;
}

}  // namespace

extern "C" {

const char* hs_status_string(hs_status status) {
  switch (status) {
    case HS_OK: return "ok";
    case HS_NOT_FOUND: return "not found";
    case HS_COMMON_FACTOR: return "common factor";
    case HS_INVALID_ARGUMENT: return "invalid argument";
    case HS_OUT_OF_RANGE: return "out of range";
    case HS_TOO_LARGE: return "too large";
    case HS_OVERFLOW: return "overflow";
    case HS_NO_MEMORY: return "out of memory";
    case HS_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hs_version(void) { return "0.1.0"; }

hs_context* hs_context_create(void) { return new (std::nothrow) hs_context; }

void hs_context_destroy(hs_context* ctx) { delete ctx; }

hs_status hs_context_set_threads(hs_context* ctx, unsigned threads) {
  if (!ctx) return HS_INVALID_ARGUMENT;
  ctx->threads = threads;
  return HS_OK;
}

unsigned hs_context_threads(const hs_context* ctx) { return ctx ? ctx->threads : 0; }

const char* hs_last_error(const hs_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

int hs_is_prime(uint64_t n) { return is_prime(n) ? 1 : 0; }

hs_status hs_coprime_adjust(hs_context* ctx, uint64_t start, uint64_t a, uint64_t* out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    *out = coprime_adjust(start, a);
    return HS_OK;
  });
}

hs_status hs_factor(hs_context* ctx, uint64_t n, hs_factor_method method, int strip_mode,
                    hs_factor_report* report) {
  return guarded(ctx, [&] {
    if (!report) throw std::invalid_argument("report must not be null");
    const FactorResult r = factor(n, FactorOptions{to_method(method), strip_mode != 0});
    *report = hs_factor_report{};
    report->n = n;
    report->outcome = to_outcome(r.kind);
    if (r.split) {
      report->u = r.split->u;
      report->v = r.split->v;
    }
    const std::size_t len = std::min(r.route.size(), sizeof(report->route) - 1);
    std::memcpy(report->route, r.route.data(), len);
    report->route[len] = '\0';
    report->a = r.stats.a;
    report->w = r.stats.w;
    report->h = r.stats.h;
    report->points_enumerated = r.stats.points_enumerated;
    report->pairs_checked = r.stats.pairs_checked;
    report->gcd_shortcut = r.stats.gcd_shortcut ? 1 : 0;
    return HS_OK;
  });
}

hs_status hs_solve(hs_context* ctx, uint64_t n, uint64_t m, hs_solution_set** out,
                   uint64_t* common_factor_out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    *out = nullptr;
    auto res = solve_all(n, m);
    if (auto* cf = std::get_if<CommonFactor>(&res)) return common_factor(ctx, *cf, common_factor_out);
    *out = new hs_solution_set{std::move(std::get<SolutionSet>(res).points)};
    return HS_OK;
  });
}

hs_status hs_solve_strip(hs_context* ctx, uint64_t n, uint64_t m, uint64_t x0, uint64_t width,
                         hs_solution_set** out, uint64_t* common_factor_out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out must not be null");
    *out = nullptr;
    auto res = solve_strip(n, m, x0, width);
    if (auto* cf = std::get_if<CommonFactor>(&res)) return common_factor(ctx, *cf, common_factor_out);
    *out = new hs_solution_set{std::move(std::get<std::vector<HyperbolaPoint>>(res))};
    return HS_OK;
  });
}

size_t hs_solution_set_size(const hs_solution_set* set) { return set ? set->points.size() : 0; }

hs_status hs_solution_set_point(const hs_solution_set* set, size_t index, uint64_t* x, uint64_t* y) {
  if (!set || !x || !y) return HS_INVALID_ARGUMENT;
  if (index >= set->points.size()) return HS_OUT_OF_RANGE;
  *x = set->points[index].x;
  *y = set->points[index].y;
  return HS_OK;
}

void hs_solution_set_destroy(hs_solution_set* set) { delete set; }

hs_status hs_count_in_rect(hs_context* ctx, uint64_t n, uint64_t m, uint64_t x1, uint64_t x2,
                           uint64_t y1, uint64_t y2, uint64_t* count, uint64_t* common_factor_out) {
  return guarded(ctx, [&] {
    if (!count) throw std::invalid_argument("count must not be null");
    auto res = count_in_rect(n, m, Rect{x1, x2, y1, y2});
    if (auto* cf = std::get_if<CommonFactor>(&res)) return common_factor(ctx, *cf, common_factor_out);
    *count = std::get<u64>(res);
    return HS_OK;
  });
}

hs_status hs_second_moment(hs_context* ctx, uint64_t n, uint64_t a, uint64_t cell_w, uint64_t cell_h,
                           hs_moment_domain domain, int with_spectral, hs_moment_report* report) {
  return guarded(ctx, [&] {
    if (!report) throw std::invalid_argument("report must not be null");
    if (domain != HS_DOMAIN_SQUARE && domain != HS_DOMAIN_TORUS) {
      throw std::invalid_argument("unknown moment domain");
    }
    if (with_spectral && domain != HS_DOMAIN_TORUS) {
      throw std::invalid_argument("the spectral value is defined on the torus domain");
    }
    const MomentDomain dom =
        domain == HS_DOMAIN_TORUS ? MomentDomain::kFullTorusQ2 : MomentDomain::kFundamentalSquare;
    const MomentReport r = second_moment_direct(n, a, cell_w, cell_h, dom);
    *report = hs_moment_report{};
    report->n = r.n;
    report->a = r.a;
    report->cell_w = r.cell_w;
    report->cell_h = r.cell_h;
    report->domain = domain;
    report->cells = r.cells;
    report->sum_counts = r.sum_counts;
    report->sum_squares = r.sum_squares;
    report->expected_mean_cell = r.expected_mean_cell;
    report->k0_term = r.k0_term;
    report->full_cells = r.full_cells;
    report->full_sum_counts = r.full_sum_counts;
    report->full_sum_squares = r.full_sum_squares;
    report->edge_remainder = r.edge_remainder;
    if (with_spectral) {
      const SpectralMoment s = second_moment_spectral_detail(n, a, cell_w, cell_h, ctx->threads);
      report->has_spectral = 1;
      report->spectral_value = s.total;
      report->spectral_k0 = s.k0_slice;
    }
    return HS_OK;
  });
}

hs_status hs_kloosterman(hs_context* ctx, int64_t m, int64_t n, uint64_t a, double* value,
                         double* imag_residual, double* bound) {
  return guarded(ctx, [&] {
    const KloostermanValue k = kloosterman(m, n, a);
    if (value) *value = k.value;
    if (imag_residual) *imag_residual = k.imag_residual;
    if (bound) *bound = weil_bound(m, n, a);
    return HS_OK;
  });
}

hs_status hs_deviation_scan(hs_context* ctx, uint64_t n, uint64_t a, uint64_t trials, uint64_t seed,
                            hs_deviation_summary* summary, hs_deviation_trial* trials_out) {
  return guarded(ctx, [&] {
    if (!summary) throw std::invalid_argument("summary must not be null");
    const DeviationReport r = deviation_scan(n, a, trials, seed, ctx->threads);
    *summary = hs_deviation_summary{r.n, r.a, r.seed, trials, r.max_abs, r.mean_abs};
    if (trials_out) {
      for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const DeviationTrial& t = r.trials[i];
        trials_out[i] = hs_deviation_trial{t.rect.x1, t.rect.x2, t.rect.y1, t.rect.y2, t.count, t.expected};
      }
    }
    return HS_OK;
  });
}

hs_status hs_factor_via_poly(hs_context* ctx, uint64_t n, uint64_t a, uint64_t d, uint64_t max_points,
                             uint64_t* u, uint64_t* v) {
  return guarded(ctx, [&] {
    if (!u || !v) throw std::invalid_argument("outputs must not be null");
    PolyLimits limits;
    if (max_points != 0) limits.max_points = max_points;
    const auto f = factor_via_poly(n, a, d, limits);
    if (!f) return fail(ctx, HS_NOT_FOUND, "no exact-degree polynomial split");
    *u = f->u;
    *v = f->v;
    return HS_OK;
  });
}

hs_status hs_random_semiprime(hs_context* ctx, uint64_t* rng_state, uint64_t nmin, uint64_t nmax,
                              int balanced, uint64_t* n, uint64_t* p, uint64_t* q) {
  return guarded(ctx, [&] {
    if (!rng_state || !n || !p || !q) throw std::invalid_argument("pointers must not be null");
    SplitMix64 rng(*rng_state);
    const auto s = balanced ? random_balanced_semiprime(rng, nmin, nmax) : random_semiprime(rng, nmin, nmax);
    *rng_state = rng.state();
    if (!s) return fail(ctx, HS_NOT_FOUND, "no semiprime found in range");
    *n = s->n;
    *p = s->p;
    *q = s->q;
    return HS_OK;
  });
}

}  // extern "C"
