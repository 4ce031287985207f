#include "hideseek/polysearch.hpp"

#include <algorithm>
#include <string>

namespace hideseek {

DigitVector digits(u64 value, u64 a) {
  if (value == 0) throw std::invalid_argument("digits: value must be >= 1");
  if (a < 2) throw std::invalid_argument("digits: base must be >= 2");
  DigitVector dv{a, {}};
  while (value != 0) {
    dv.digits.push_back(value % a);
    value /= a;
  }
  return dv;
}

u128 eval_poly(const std::vector<u64>& coeffs, u64 t) {
  u128 acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (t != 0 && acc > (~static_cast<u128>(0) - coeffs[i]) / t) {
      throw std::overflow_error("eval_poly: value exceeds 128 bits");
    }
    acc = acc * t + coeffs[i];
  }
  return acc;
}

u64 evaluate(const DigitVector& dv) {
  const u128 v = eval_poly(dv.digits, dv.base);
  if (v >> 64) throw std::overflow_error("evaluate: value exceeds 64 bits");
  return static_cast<u64>(v);
}

u64 lambda(u64 d, u64 delta) {
  const u128 v = eval_poly(std::vector<u64>(d + 1, 1), delta);
  if (v >> 64) throw std::overflow_error("lambda: value exceeds 64 bits");
  return static_cast<u64>(v);
}

namespace {

void require_modulus(u64 a, u64 delta) {
  if (a < delta + 2) {
    throw std::invalid_argument("need a - delta >= 2 (a=" + std::to_string(a) +
                                ", delta=" + std::to_string(delta) + ")");
  }
}

}  // namespace

u64 predicted_instance_size(u64 a, u64 d) {
  u128 total = 0;
  for (u64 delta = 0; delta <= d; ++delta) {
    require_modulus(a, delta);
    const u128 lam = lambda(d, delta);
    total += static_cast<u128>(euler_phi(a - delta)) * lam * lam;
    if (total >> 63) return ~0ULL;
  }
  return static_cast<u64>(total);
}

OrCommonFactor<std::vector<HyperbolaPoint>> extended_solutions(u64 n, u64 a, u64 delta, u64 d,
                                                               const PolyLimits& limits) {
  require_modulus(a, delta);
  const u64 m = a - delta;
  const u128 bound = static_cast<u128>(a) * lambda(d, delta);
  const u128 reps = bound / m + 1;
  if (static_cast<u128>(euler_phi(m)) * reps * reps > limits.max_points) {
    throw TooLarge("extended_solutions: more than " + std::to_string(limits.max_points) + " points");
  }
  auto base = solve_all(n, m);
  if (auto* cf = std::get_if<CommonFactor>(&base)) return *cf;
  const u64 limit = static_cast<u64>(bound);
  std::vector<HyperbolaPoint> out;
  for (const HyperbolaPoint& p : std::get<SolutionSet>(base).points) {
    for (u64 x = p.x; x < limit; x += m) {
      if (x == 0) continue;
      for (u64 y = p.y; y < limit; y += m) {
        if (y != 0) out.push_back({x, y});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrCommonFactor<PolyInstance> build_instance(u64 n, u64 a, u64 d, const PolyLimits& limits) {
  if (predicted_instance_size(a, d) > limits.max_points) {
    throw TooLarge("poly instance predicted above " + std::to_string(limits.max_points) + " points");
  }
  PolyInstance inst{n, a, d, {}};
  for (u64 delta = 0; delta <= d; ++delta) {
    auto set = extended_solutions(n, a, delta, d, limits);
    if (auto* cf = std::get_if<CommonFactor>(&set)) return *cf;
    inst.sets.push_back(std::move(std::get<std::vector<HyperbolaPoint>>(set)));
  }
  return inst;
}

namespace {

// Points of one set grouped by x, y ascending within each x.
struct XIndex {
  u64 limit = 0;
  std::vector<u64> offsets;
  std::vector<u64> ys;

  XIndex(const std::vector<HyperbolaPoint>& pts, u64 box) : limit(box), offsets(box + 1, 0) {
    for (const HyperbolaPoint& p : pts) {
      if (p.x >= box || p.y >= box) throw std::invalid_argument("poly_search: point outside its box");
      ++offsets[p.x + 1];
    }
    for (u64 x = 0; x < box; ++x) offsets[x + 1] += offsets[x];
    ys.resize(pts.size());
    std::vector<u64> fill(offsets.begin(), offsets.end() - 1);
    for (const HyperbolaPoint& p : pts) ys[fill[p.x]++] = p.y;
    for (u64 x = 0; x < box; ++x) std::sort(ys.begin() + offsets[x], ys.begin() + offsets[x + 1]);
  }
};

// Incremental search over one point per set. A polynomial with integer
// coefficients has j-th forward difference at 0 divisible by j!, and with
// nonnegative monomial coefficients below a each Newton coefficient
// c_j = sum_{i>=j} S2(i, j) u_i lies in [0, (a-1) sum_{i>=j} S2(i, j)].
class Searcher {
 public:
  explicit Searcher(const PolyInstance& inst) : inst_(inst), d_(inst.d), a_(inst.a) {
    if (inst.sets.size() != d_ + 1) throw std::invalid_argument("poly_search: need d+1 sets");
    for (u64 delta = 0; delta <= d_; ++delta) {
      lam_.push_back(lambda(d_, delta));
      index_.emplace_back(inst.sets[delta], a_ * lam_.back());
    }
    const std::size_t n = d_ + 1;
    // Stirling numbers: first kind (signed) and second kind.
    s1_.assign(n, std::vector<i128>(n, 0));
    s2_.assign(n, std::vector<i128>(n, 0));
    s1_[0][0] = s2_[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 1; k <= i; ++k) {
        s1_[i][k] = s1_[i - 1][k - 1] - static_cast<i128>(i - 1) * s1_[i - 1][k];
        s2_[i][k] = s2_[i - 1][k - 1] + static_cast<i128>(k) * s2_[i - 1][k];
      }
    }
    fact_.assign(n, 1);
    binom_.assign(n, std::vector<i128>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) fact_[i] = fact_[i - 1] * static_cast<i128>(i);
      binom_[i][0] = 1;
      for (std::size_t k = 1; k <= i; ++k) binom_[i][k] = binom_[i - 1][k - 1] + (k < i ? binom_[i - 1][k] : 0);
    }
    newton_max_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = j; i < n; ++i) newton_max_[j] += s2_[i][j];
      newton_max_[j] *= static_cast<i128>(a_ - 1);
    }
    xs_.assign(n, 0);
    ys_.assign(n, 0);
    cx_.assign(n, 0);
    cy_.assign(n, 0);
  }

  std::vector<PolyCoefficients> run() {
    const XIndex& first = index_[0];
    for (u64 x = 0; x < first.limit; ++x) {
      for (u64 k = first.offsets[x]; k < first.offsets[x + 1]; ++k) {
        if (try_level(0, x, first.ys[k])) descend(1);
      }
    }
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  bool newton(const std::vector<i128>& vals, std::size_t j, i128& coeff) const {
    i128 diff = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      const i128 term = binom_[j][i] * vals[i];
      diff += ((j - i) % 2 == 0) ? term : -term;
    }
    if (diff % fact_[j] != 0) return false;
    coeff = diff / fact_[j];
    if (coeff < 0 || coeff > newton_max_[j]) return false;
    if (j == d_ && coeff < 1) return false;
    return true;
  }

  bool try_level(std::size_t j, u64 x, u64 y) {
    xs_[j] = x;
    ys_[j] = y;
    return newton(xs_, j, cx_[j]) && newton(ys_, j, cy_[j]);
  }

  void descend(std::size_t j) {
    if (j > d_) {
      emit();
      return;
    }
    const XIndex& idx = index_[j];
    const u128 step = static_cast<u128>(a_ - 1) * (lam_[j] - lam_[j - 1]);
    const u64 x_lo = static_cast<u64>(xs_[j - 1]);
    const u64 y_lo = static_cast<u64>(ys_[j - 1]);
    const u64 x_hi = static_cast<u64>(std::min<u128>(x_lo + step, idx.limit - 1));
    const u64 y_hi = static_cast<u64>(std::min<u128>(y_lo + step, idx.limit - 1));
    for (u64 x = x_lo; x <= x_hi; ++x) {
      auto begin = idx.ys.begin() + idx.offsets[x];
      auto end = idx.ys.begin() + idx.offsets[x + 1];
      for (auto it = std::lower_bound(begin, end, y_lo); it != end && *it <= y_hi; ++it) {
        if (try_level(j, x, *it)) descend(j + 1);
      }
    }
  }

  bool to_monomial(const std::vector<i128>& newton_coeffs, std::vector<u64>& out) const {
    out.assign(d_ + 1, 0);
    for (std::size_t i = 0; i <= d_; ++i) {
      i128 c = 0;
      for (std::size_t j = i; j <= d_; ++j) c += newton_coeffs[j] * s1_[j][i];
      if (c < 0 || c >= static_cast<i128>(a_)) return false;
      out[i] = static_cast<u64>(c);
    }
    return out[d_] != 0;
  }

  void emit() {
    PolyCoefficients pc;
    if (to_monomial(cx_, pc.u) && to_monomial(cy_, pc.v)) out_.push_back(std::move(pc));
  }

  const PolyInstance& inst_;
  u64 d_;
  u64 a_;
  std::vector<u64> lam_;
  std::vector<XIndex> index_;
  std::vector<std::vector<i128>> s1_, s2_, binom_;
  std::vector<i128> fact_, newton_max_;
  std::vector<i128> xs_, ys_, cx_, cy_;
  std::vector<PolyCoefficients> out_;
};

}  // namespace

std::vector<PolyCoefficients> poly_search(const PolyInstance& inst) {
  if (inst.a < inst.d + 2) throw std::invalid_argument("poly_search: need a - d >= 2");
  for (const auto& s : inst.sets) {
    if (s.empty()) return {};
  }
  return Searcher(inst).run();
}

std::optional<Factorization> factor_via_poly(u64 n, u64 a, u64 d, const PolyLimits& limits) {
  if (a < d + 2) throw std::invalid_argument("factor_via_poly: need a - d >= 2");
  std::optional<Factorization> shortcut;
  bool coprime = true;
  for (u64 delta = 0; delta <= d; ++delta) {
    const u64 g = gcd(n, a - delta);
    if (g == 1) continue;
    coprime = false;
    auto f = make_factorization(n, g);
    if (f && (!shortcut || f->u < shortcut->u)) shortcut = f;
  }
  if (!coprime) return shortcut;

  auto inst = build_instance(n, a, d, limits);
  const PolyInstance& pi = std::get<PolyInstance>(inst);
  for (const PolyCoefficients& pc : poly_search(pi)) {
    const u128 u = eval_poly(pc.u, a);
    const u128 v = eval_poly(pc.v, a);
    if (u > 1 && u < n && u * v == n) return make_factorization(n, static_cast<u64>(u));
  }
  return std::nullopt;
}

}  // namespace hideseek
