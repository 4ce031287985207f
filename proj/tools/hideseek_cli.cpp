// hideseek command-line tool. Talks to the library only through hideseek.h.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hideseek/hideseek.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kNoFactor = 1, kUsage = 2, kInternal = 3 };

struct Context {
  std::unique_ptr<hs_context, decltype(&hs_context_destroy)> ptr{hs_context_create(), &hs_context_destroy};
  hs_context* get() const { return ptr.get(); }
};

struct Global {
  std::string format = "plain";
  unsigned threads = 0;
};

int report_status(const Context& ctx, hs_status st) {
  std::cerr << "error: " << hs_status_string(st);
  const std::string msg = hs_last_error(ctx.get());
  if (!msg.empty()) std::cerr << ": " << msg;
  std::cerr << "\n";
  switch (st) {
    case HS_INVALID_ARGUMENT:
    case HS_OUT_OF_RANGE:
    case HS_TOO_LARGE:
    case HS_OVERFLOW:
      return kUsage;
    default:
      return kInternal;
  }
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

bool verified(uint64_t n, uint64_t u, uint64_t v) {
  return u > 1 && v > 1 && static_cast<unsigned __int128>(u) * v == n;
}

// ---- factor ----

struct FactorArgs {
  uint64_t n = 0;
  bool balanced = false, general = false, trial_only = false, strip = false;
};

hs_factor_method pick_method(const FactorArgs& a) {
  if (a.balanced) return HS_METHOD_BALANCED;
  if (a.general) return HS_METHOD_GENERAL;
  if (a.trial_only) return HS_METHOD_TRIAL_ONLY;
  return HS_METHOD_AUTO;
}

const char* outcome_name(hs_factor_outcome o) {
  switch (o) {
    case HS_OUTCOME_SPLIT: return "split";
    case HS_OUTCOME_PRIME: return "prime";
    case HS_OUTCOME_UNIT: return "unit";
    case HS_OUTCOME_NOT_FOUND: break;
  }
  return "not_found";
}

const char* kBenchHeader = "N,method,a,w,h,points_enumerated,pairs_checked,micros,u,v";

std::string bench_row(const hs_factor_report& r, long long micros) {
  std::ostringstream os;
  os << r.n << ',' << r.route << ',' << r.a << ',' << r.w << ',' << r.h << ',' << r.points_enumerated << ','
     << r.pairs_checked << ',' << micros << ',' << r.u << ',' << r.v;
  return os.str();
}

json factor_json(const hs_factor_report& r, long long micros) {
  json j;
  j["N"] = r.n;
  j["outcome"] = outcome_name(r.outcome);
  j["method"] = r.route;
  j["a"] = r.a;
  j["w"] = r.w;
  j["h"] = r.h;
  j["points_enumerated"] = r.points_enumerated;
  j["pairs_checked"] = r.pairs_checked;
  j["micros"] = micros;
  j["u"] = r.u;
  j["v"] = r.v;
  return j;
}

int cmd_factor(const Global& g, const FactorArgs& args) {
  Context ctx;
  hs_context_set_threads(ctx.get(), g.threads);
  hs_factor_report r{};
  const auto t0 = std::chrono::steady_clock::now();
  const hs_status st = hs_factor(ctx.get(), args.n, pick_method(args), args.strip ? 1 : 0, &r);
  const long long micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  if (st != HS_OK) return report_status(ctx, st);
  if (r.outcome == HS_OUTCOME_SPLIT && !verified(args.n, r.u, r.v)) {
    std::cerr << "error: internal: split failed verification\n";
    return kInternal;
  }
  if (g.format == "json") {
    std::cout << factor_json(r, micros).dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << kBenchHeader << "\n" << bench_row(r, micros) << "\n";
  } else {
    switch (r.outcome) {
      case HS_OUTCOME_SPLIT: std::cout << r.n << " = " << r.u << " * " << r.v << "\n"; break;
      case HS_OUTCOME_PRIME: std::cout << r.n << " is prime\n"; break;
      case HS_OUTCOME_UNIT: std::cout << r.n << " is a unit\n"; break;
      case HS_OUTCOME_NOT_FOUND: std::cout << r.n << ": no factor found\n"; break;
    }
  }
  return r.outcome == HS_OUTCOME_NOT_FOUND ? kNoFactor : kOk;
}

// ---- solve ----

struct SolveArgs {
  uint64_t n = 0, m = 0;
  std::vector<uint64_t> rect;
};

int cmd_solve(const Global& g, const SolveArgs& args) {
  Context ctx;
  uint64_t cf = 0;
  auto print_cf = [&] {
    if (g.format == "json") {
      std::cout << json{{"N", args.n}, {"modulus", args.m}, {"common_factor", cf}}.dump() << "\n";
    } else if (g.format == "csv") {
      std::cout << "N,modulus,common_factor\n" << args.n << ',' << args.m << ',' << cf << "\n";
    } else {
      std::cout << "common factor " << cf << "\n";
    }
    return kOk;
  };

  if (!args.rect.empty()) {
    const auto& r = args.rect;
    uint64_t count = 0;
    const hs_status st = hs_count_in_rect(ctx.get(), args.n, args.m, r[0], r[1], r[2], r[3], &count, &cf);
    if (st == HS_COMMON_FACTOR) return print_cf();
    if (st != HS_OK) return report_status(ctx, st);
    if (g.format == "json") {
      std::cout << json{{"N", args.n}, {"modulus", args.m}, {"rect", r}, {"count", count}}.dump() << "\n";
    } else if (g.format == "csv") {
      std::cout << "N,modulus,x1,x2,y1,y2,count\n"
                << args.n << ',' << args.m << ',' << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ','
                << count << "\n";
    } else {
      std::cout << "count " << count << "\n";
    }
    return kOk;
  }

  hs_solution_set* raw = nullptr;
  const hs_status st = hs_solve(ctx.get(), args.n, args.m, &raw, &cf);
  if (st == HS_COMMON_FACTOR) return print_cf();
  if (st != HS_OK) return report_status(ctx, st);
  std::unique_ptr<hs_solution_set, decltype(&hs_solution_set_destroy)> set(raw, &hs_solution_set_destroy);
  const size_t size = hs_solution_set_size(set.get());
  std::vector<std::pair<uint64_t, uint64_t>> pts(size);
  for (size_t i = 0; i < size; ++i) hs_solution_set_point(set.get(), i, &pts[i].first, &pts[i].second);
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& [x, y] : pts) arr.push_back({x, y});
    std::cout << json{{"N", args.n}, {"modulus", args.m}, {"count", size}, {"points", arr}}.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "x,y\n";
    for (const auto& [x, y] : pts) std::cout << x << ',' << y << "\n";
  } else {
    std::cout << size << " points\n";
    for (const auto& [x, y] : pts) std::cout << x << ' ' << y << "\n";
  }
  return kOk;
}

// ---- moment ----

struct MomentArgs {
  uint64_t n = 0, a = 0;
  std::optional<uint64_t> cell;
  std::vector<uint64_t> rect;
  bool spectral = false;
  std::string domain;
};

int cmd_moment(const Global& g, const MomentArgs& args) {
  Context ctx;
  hs_context_set_threads(ctx.get(), g.threads);
  const uint64_t w = args.cell ? *args.cell : args.rect.at(0);
  const uint64_t h = args.cell ? *args.cell : args.rect.at(1);
  hs_moment_domain domain = args.spectral ? HS_DOMAIN_TORUS : HS_DOMAIN_SQUARE;
  if (args.domain == "square") domain = HS_DOMAIN_SQUARE;
  if (args.domain == "torus") domain = HS_DOMAIN_TORUS;
  if (args.spectral && domain != HS_DOMAIN_TORUS) {
    std::cerr << "error: --spectral compares against the torus domain\n";
    return kUsage;
  }
  hs_moment_report r{};
  const hs_status st = hs_second_moment(ctx.get(), args.n, args.a, w, h, domain, args.spectral ? 1 : 0, &r);
  if (st != HS_OK) return report_status(ctx, st);

  const std::string dom = domain == HS_DOMAIN_TORUS ? "torus" : "square";
  const double rel = r.has_spectral && r.sum_squares
                         ? std::abs(r.spectral_value - static_cast<double>(r.sum_squares)) /
                               static_cast<double>(r.sum_squares)
                         : 0.0;
  if (g.format == "json") {
    json j;
    j["N"] = r.n;
    j["a"] = r.a;
    j["cell_w"] = r.cell_w;
    j["cell_h"] = r.cell_h;
    j["domain"] = dom;
    j["cells"] = r.cells;
    j["sum_counts"] = r.sum_counts;
    j["sum_squares"] = r.sum_squares;
    j["expected_mean_cell"] = r.expected_mean_cell;
    j["k0_term"] = r.k0_term;
    if (r.has_spectral) {
      j["spectral_value"] = r.spectral_value;
      j["spectral_k0"] = r.spectral_k0;
      j["relative_difference"] = rel;
    }
    j["full_cells"] = r.full_cells;
    j["full_sum_counts"] = r.full_sum_counts;
    j["full_sum_squares"] = r.full_sum_squares;
    j["edge_remainder"] = r.edge_remainder;
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "N,a,cell_w,cell_h,domain,cells,sum_counts,sum_squares,expected_mean_cell,k0_term,"
                 "spectral_value,spectral_k0,full_cells,full_sum_counts,full_sum_squares,edge_remainder\n";
    std::cout << r.n << ',' << r.a << ',' << r.cell_w << ',' << r.cell_h << ',' << dom << ',' << r.cells << ','
              << r.sum_counts << ',' << r.sum_squares << ',' << fmt_double(r.expected_mean_cell) << ','
              << fmt_double(r.k0_term) << ',' << (r.has_spectral ? fmt_double(r.spectral_value) : "") << ','
              << (r.has_spectral ? fmt_double(r.spectral_k0) : "") << ',' << r.full_cells << ','
              << r.full_sum_counts << ',' << r.full_sum_squares << ',' << r.edge_remainder << "\n";
  } else {
    std::cout << "domain " << dom << ", cells " << r.cells << ", cell " << r.cell_w << "x" << r.cell_h << "\n";
    std::cout << "sum_counts " << r.sum_counts << "\n";
    std::cout << "sum_squares " << r.sum_squares << "\n";
    std::cout << "expected_mean_cell " << fmt_double(r.expected_mean_cell) << "\n";
    std::cout << "k0_term " << fmt_double(r.k0_term) << "\n";
    if (r.has_spectral) {
      std::cout << "spectral_value " << fmt_double(r.spectral_value) << "\n";
      std::cout << "spectral_k0 " << fmt_double(r.spectral_k0) << "\n";
      std::cout << "relative_difference " << fmt_double(rel) << "\n";
    }
    if (domain == HS_DOMAIN_SQUARE) {
      std::cout << "full_cells " << r.full_cells << ", full_sum_squares " << r.full_sum_squares
                << ", edge_remainder " << r.edge_remainder << "\n";
    }
  }
  return kOk;
}

// ---- kloosterman ----

int cmd_kloosterman(const Global& g, int64_t m, int64_t n, uint64_t a) {
  Context ctx;
  double value = 0, imag = 0, bound = 0;
  const hs_status st = hs_kloosterman(ctx.get(), m, n, a, &value, &imag, &bound);
  if (st != HS_OK) return report_status(ctx, st);
  if (g.format == "json") {
    std::cout << json{{"m", m}, {"n", n}, {"a", a}, {"value", value}, {"imag_residual", imag}, {"bound", bound}}.dump()
              << "\n";
  } else if (g.format == "csv") {
    std::cout << "m,n,a,value,imag_residual,bound\n"
              << m << ',' << n << ',' << a << ',' << fmt_double(value) << ',' << fmt_double(imag) << ','
              << fmt_double(bound) << "\n";
  } else {
    std::cout << "S(" << m << ", " << n << "; " << a << ") = " << fmt_double(value) << "  (bound "
              << fmt_double(bound) << ")\n";
  }
  return kOk;
}

// ---- scan-deviation ----

struct ScanArgs {
  uint64_t n = 0, a = 0, trials = 200, seed = 1;
};

int cmd_scan(const Global& g, const ScanArgs& args) {
  Context ctx;
  hs_context_set_threads(ctx.get(), g.threads);
  hs_deviation_summary s{};
  std::vector<hs_deviation_trial> trials(args.trials);
  const hs_status st =
      hs_deviation_scan(ctx.get(), args.n, args.a, args.trials, args.seed, &s, trials.data());
  if (st != HS_OK) return report_status(ctx, st);
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& t : trials) {
      arr.push_back({{"x1", t.x1}, {"x2", t.x2}, {"y1", t.y1}, {"y2", t.y2}, {"count", t.count},
                     {"expected", t.expected}});
    }
    std::cout << json{{"N", s.n},       {"a", s.a},           {"seed", s.seed}, {"trials", s.trials},
                      {"max_abs", s.max_abs}, {"mean_abs", s.mean_abs}, {"rects", arr}}
                     .dump()
              << "\n";
  } else if (g.format == "csv") {
    std::cout << "x1,x2,y1,y2,count,expected,deviation\n";
    for (const auto& t : trials) {
      std::cout << t.x1 << ',' << t.x2 << ',' << t.y1 << ',' << t.y2 << ',' << t.count << ','
                << fmt_double(t.expected) << ',' << fmt_double(static_cast<double>(t.count) - t.expected) << "\n";
    }
  } else {
    std::cout << "N " << s.n << ", a " << s.a << ", seed " << s.seed << ", trials " << s.trials << "\n";
    std::cout << "max_abs " << fmt_double(s.max_abs) << "\n";
    std::cout << "mean_abs " << fmt_double(s.mean_abs) << "\n";
  }
  return kOk;
}

// ---- polyfactor ----

int cmd_polyfactor(const Global& g, uint64_t n, uint64_t a, uint64_t d, uint64_t max_points) {
  Context ctx;
  uint64_t u = 0, v = 0;
  const hs_status st = hs_factor_via_poly(ctx.get(), n, a, d, max_points, &u, &v);
  if (st != HS_OK && st != HS_NOT_FOUND) return report_status(ctx, st);
  const bool found = st == HS_OK;
  if (found && !verified(n, u, v)) {
    std::cerr << "error: internal: split failed verification\n";
    return kInternal;
  }
  if (g.format == "json") {
    json j{{"N", n}, {"a", a}, {"d", d}, {"found", found}};
    if (found) {
      j["u"] = u;
      j["v"] = v;
    }
    std::cout << j.dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "N,a,d,u,v\n" << n << ',' << a << ',' << d << ',' << u << ',' << v << "\n";
  } else if (found) {
    std::cout << n << " = " << u << " * " << v << "\n";
  } else {
    std::cout << n << ": no polynomial split found\n";
  }
  return found ? kOk : kNoFactor;
}

// ---- bench ----

struct BenchArgs {
  uint64_t nmin = 1000, nmax = 1'000'000, samples = 10, seed = 1;
  std::string csv_path, method = "auto", shape = "balanced";
  bool strip = false;
};

int cmd_bench(const Global& g, const BenchArgs& args) {
  Context ctx;
  hs_context_set_threads(ctx.get(), g.threads);
  std::ofstream file;
  if (!args.csv_path.empty()) {
    file.open(args.csv_path);
    if (!file) {
      std::cerr << "error: cannot open " << args.csv_path << "\n";
      return kUsage;
    }
  }
  std::ostream& out = args.csv_path.empty() ? std::cout : file;
  out << kBenchHeader << "\n";

  hs_factor_method method = HS_METHOD_AUTO;
  if (args.method == "balanced") method = HS_METHOD_BALANCED;
  if (args.method == "general") method = HS_METHOD_GENERAL;
  if (args.method == "trial-only") method = HS_METHOD_TRIAL_ONLY;

  uint64_t state = args.seed;
  int rc = kOk;
  if (args.nmin > args.nmax) return rc;
  for (uint64_t i = 0; i < args.samples; ++i) {
    uint64_t n = 0, p = 0, q = 0;
    hs_status st = hs_random_semiprime(ctx.get(), &state, args.nmin, args.nmax, args.shape == "balanced", &n, &p, &q);
    if (st == HS_NOT_FOUND) {
      std::cerr << "warning: no semiprime in [" << args.nmin << ", " << args.nmax << "]\n";
      break;
    }
    if (st != HS_OK) return report_status(ctx, st);
    hs_factor_report r{};
    const auto t0 = std::chrono::steady_clock::now();
    st = hs_factor(ctx.get(), n, method, args.strip ? 1 : 0, &r);
    const long long micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    if (st != HS_OK) return report_status(ctx, st);
    if (r.outcome == HS_OUTCOME_SPLIT) {
      if (!verified(n, r.u, r.v) || r.u != p) {
        std::cerr << "error: internal: wrong split for " << n << "\n";
        return kInternal;
      }
    } else {
      rc = kNoFactor;
    }
    if (g.format == "json") {
      std::cout << factor_json(r, micros).dump() << "\n";
    }
    out << bench_row(r, micros) << "\n";
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer factoring and modular-hyperbola statistics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(hs_version()));
  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = auto)")
      ->envname("HIDESEEK_THREADS")
      ->capture_default_str();

  int rc = kOk;

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "Factor N");
  factor->add_option("N", fa.n, "Integer >= 1")->required();
  auto* f_bal = factor->add_flag("--balanced", fa.balanced, "Balanced variant only");
  auto* f_gen = factor->add_flag("--general", fa.general, "General variant without the small-N cutoff");
  auto* f_trial = factor->add_flag("--trial-only", fa.trial_only, "Trial division only");
  f_bal->excludes(f_gen)->excludes(f_trial);
  f_gen->excludes(f_trial);
  factor->add_flag("--strip", fa.strip, "Strip-by-strip enumeration");
  factor->callback([&] { rc = cmd_factor(g, fa); });

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Points of xy = N mod a");
  solve->add_option("N", sa.n)->required();
  solve->add_option("a", sa.m)->required();
  solve->add_option("--rect", sa.rect, "x1 x2 y1 y2: count points in [x1,x2) x [y1,y2)")->expected(4);
  solve->callback([&] { rc = cmd_solve(g, sa); });

  MomentArgs ma;
  auto* moment = app.add_subcommand("moment", "Second moment of cell counts");
  moment->add_option("N", ma.n)->required();
  moment->add_option("a", ma.a)->required();
  auto* m_cell = moment->add_option("--cell", ma.cell, "Square cell side");
  auto* m_rect = moment->add_option("--rect", ma.rect, "Cell width and height")->expected(2);
  m_cell->excludes(m_rect);
  moment->add_flag("--spectral", ma.spectral, "Also evaluate the Kloosterman-sum expression (torus)");
  moment->add_option("--domain", ma.domain, "square or torus")->check(CLI::IsMember({"square", "torus"}));
  moment->callback([&] {
    if (!ma.cell && ma.rect.empty()) throw CLI::RequiredError("--cell or --rect");
    rc = cmd_moment(g, ma);
  });

  int64_t km = 0, kn = 0;
  uint64_t ka = 0;
  auto* kl = app.add_subcommand("kloosterman", "Kloosterman sum S(m, n; a)");
  kl->add_option("m", km)->required();
  kl->add_option("n", kn)->required();
  kl->add_option("a", ka)->required();
  kl->callback([&] { rc = cmd_kloosterman(g, km, kn, ka); });

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan-deviation", "Count deviation over random rectangles");
  scan->add_option("N", sc.n)->required();
  scan->add_option("a", sc.a)->required();
  scan->add_option("--trials", sc.trials)->capture_default_str();
  scan->add_option("--seed", sc.seed)->capture_default_str();
  scan->callback([&] { rc = cmd_scan(g, sc); });

  uint64_t pn = 0, pa = 0, pd = 0, pmax = 0;
  auto* poly = app.add_subcommand("polyfactor", "Polynomial digit search");
  poly->add_option("N", pn)->required();
  poly->add_option("a", pa)->required();
  poly->add_option("d", pd)->required();
  poly->add_option("--max-points", pmax, "Point budget (0 = default)");
  poly->callback([&] { rc = cmd_polyfactor(g, pn, pa, pd, pmax); });

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Factor random semiprimes and record timings");
  bench->add_option("--nmin", ba.nmin)->capture_default_str();
  bench->add_option("--nmax", ba.nmax)->capture_default_str();
  bench->add_option("--samples", ba.samples)->capture_default_str();
  bench->add_option("--seed", ba.seed)->capture_default_str();
  bench->add_option("--csv", ba.csv_path, "Output file (default stdout)");
  bench->add_option("--method", ba.method)
      ->check(CLI::IsMember({"auto", "balanced", "general", "trial-only"}))
      ->capture_default_str();
  bench->add_option("--shape", ba.shape, "balanced (q < 2p) or any")
      ->check(CLI::IsMember({"balanced", "any"}))
      ->capture_default_str();
  bench->add_flag("--strip", ba.strip);
  bench->callback([&] { rc = cmd_bench(g, ba); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return rc;
}
