#include "farey/mainterms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "farey/errors.hpp"
#include "farey/hyperbola.hpp"
#include "farey/log_binomial.hpp"
#include "farey/parallel.hpp"
#include "farey/products.hpp"
#include "farey/radix.hpp"

namespace farey {
namespace {

void require_in_table(const SieveTables& t, std::int64_t n) {
  if (n < 1 || n > t.n_max())
    throw std::out_of_range("n = " + std::to_string(n) + " outside sieve range [1, " + std::to_string(t.n_max()) +
                            "]");
}

void require_prime(std::int64_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// Digit quantities at q, all scaled by p - 1 where a division would appear.
struct Digits {
  std::int64_t p;
  std::int64_t S(std::int64_t q) const { return digit_summatory(p, q); }
  std::int64_t d(std::int64_t q) const { return digit_sum(p, q); }
  // (p-1) ord_p(G(q))
  std::int64_t g_scaled(std::int64_t q) const { return 2 * S(q) - (q - 1) * d(q); }
};

// Summand of the remainder l-sum for family j, scaled by p - 1.
std::int64_t remainder_weight(int j, const Digits& dg, std::int64_t l) {
  switch (j) {
    case 0: return dg.g_scaled(l);
    case 1: return 2 * dg.S(l);
    case 2: return -(l - 1) * dg.d(l);
  }
  throw std::invalid_argument("split family must be 0, 1 or 2");
}

long double unreduced_excess(std::int64_t q) {
  return log_g_exact_ld(q) - static_cast<long double>(binomial_count(q));
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

}  // namespace

SplitParams split_params(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("split_params needs n >= 1");
  const std::int64_t L = isqrt(n);
  return {n, L, n / (L + 1)};
}

double mikolas_remainder(std::int64_t n, const SieveTables& t) {
  require_in_table(t, n);
  const long double v = log_f_ld(n, t) - static_cast<long double>(t.phi_sum(n)) + 0.5L * t.psi(n);
  return static_cast<double>(v);
}

std::int64_t phi_inf_1(std::int64_t n, const SieveTables& t) {
  require_in_table(t, n);
  std::int64_t sum = 0;
  for_each_mobius_block(t, n, [&](std::int64_t q, std::int64_t w) { sum += w * binomial_count(q); });
  return sum;
}

static long double phi_inf_2_ld(std::int64_t n, const SieveTables& t) {
  require_in_table(t, n);
  const auto sp = split_params(n);
  long double sum = 0.0L;
  for_each_mobius_term(t, n, sp.K, [&](std::int64_t q, std::int64_t mu) { sum += mu * unreduced_excess(q); });
  return sum;
}

double phi_inf_2(std::int64_t n, const SieveTables& t) { return static_cast<double>(phi_inf_2_ld(n, t)); }

InfRemainder r_inf_detail(std::int64_t n, const SieveTables& t) {
  require_in_table(t, n);
  const auto sp = split_params(n);
  long double blocks = 0.0L;
  for (std::int64_t l = 1; l <= sp.L; ++l) {
    const std::int64_t dm = t.mertens_floor(n / l) - t.mertens_floor(n / (l + 1));
    if (dm != 0) blocks += dm * unreduced_excess(l);
  }
  const long double lf = log_f_ld(n, t);
  const long double diff = lf - static_cast<long double>(phi_inf_1(n, t)) - phi_inf_2_ld(n, t);
  InfRemainder out;
  out.by_blocks = static_cast<double>(blocks);
  out.by_difference = static_cast<double>(diff);
  out.tolerance = 1e-12 * std::max(1.0, static_cast<double>(std::fabs(lf))) + 1e-9;
  if (std::fabs(static_cast<double>(blocks - diff)) > out.tolerance)
    throw CrossCheckError("R_inf routes disagree at n=" + std::to_string(n) + ": " + std::to_string(out.by_blocks) +
                          " vs " + std::to_string(out.by_difference));
  return out;
}

double r_inf(std::int64_t n, const SieveTables& t) { return r_inf_detail(n, t).by_blocks; }

ScaledValue operator+(ScaledValue a, ScaledValue b) {
  if (a.den != b.den) throw std::invalid_argument("scaled values with different denominators");
  return {a.num + b.num, a.den};
}

ScaledValue operator-(ScaledValue a, ScaledValue b) {
  if (a.den != b.den) throw std::invalid_argument("scaled values with different denominators");
  return {a.num - b.num, a.den};
}

ScaledValue phi_p(int j, std::int64_t p, std::int64_t n, const SieveTables& t) {
  require_prime(p);
  require_in_table(t, n);
  if (j < 0 || j > 2) throw std::invalid_argument("split family must be 0, 1 or 2");
  const Digits dg{p};
  const std::int64_t K = split_params(n).K;
  std::int64_t full = 0, shortsum = 0;
  switch (j) {
    case 0:
      for_each_mobius_term(t, n, K, [&](std::int64_t q, std::int64_t mu) { shortsum += mu * dg.g_scaled(q); });
      break;
    case 1:
      for_each_mobius_block(t, n, [&](std::int64_t q, std::int64_t w) { full -= w * (q - 1) * dg.d(q); });
      for_each_mobius_term(t, n, K, [&](std::int64_t q, std::int64_t mu) {
        shortsum += mu * (dg.g_scaled(q) + (q - 1) * dg.d(q));
      });
      break;
    case 2:
      for_each_mobius_block(t, n, [&](std::int64_t q, std::int64_t w) { full += w * 2 * dg.S(q); });
      for_each_mobius_term(t, n, K, [&](std::int64_t q, std::int64_t mu) {
        shortsum += mu * (dg.g_scaled(q) - 2 * dg.S(q));
      });
      break;
  }
  return {full + shortsum, p - 1};
}

ScaledValue r_p(int j, std::int64_t p, std::int64_t n, const SieveTables& t) {
  require_prime(p);
  require_in_table(t, n);
  const Digits dg{p};
  const std::int64_t L = split_params(n).L;
  std::int64_t sum = 0;
  for (std::int64_t l = 1; l <= L; ++l) {
    const std::int64_t dm = t.mertens_floor(n / l) - t.mertens_floor(n / (l + 1));
    if (dm != 0) sum += dm * remainder_weight(j, dg, l);
  }
  const ScaledValue r{sum, p - 1};
  const ScaledValue total = phi_p(j, p, n, t) + r;
  const std::int64_t ord = ord_f_inversion(p, n, t);
  if (total.num != ord * (p - 1))
    throw CrossCheckError("p-adic split " + std::to_string(j) + " does not reproduce ord_" + std::to_string(p) +
                          "(F(" + std::to_string(n) + "))");
  return r;
}

std::string_view to_string(SplitKind k) {
  switch (k) {
    case SplitKind::mikolas: return "mikolas";
    case SplitKind::inf: return "inf";
    case SplitKind::p0: return "p0";
    case SplitKind::p1: return "p1";
    case SplitKind::p2: return "p2";
  }
  return "?";
}

SplitKind parse_split_kind(std::string_view name) {
  if (name == "mikolas") return SplitKind::mikolas;
  if (name == "inf") return SplitKind::inf;
  if (name == "p0") return SplitKind::p0;
  if (name == "p1") return SplitKind::p1;
  if (name == "p2") return SplitKind::p2;
  throw ConfigError("unknown remainder kind '" + std::string(name) + "' (expected mikolas, inf, p0, p1 or p2)");
}

bool is_padic(SplitKind k) { return k == SplitKind::p0 || k == SplitKind::p1 || k == SplitKind::p2; }

SplitSeries split_series(SplitKind kind, std::optional<std::int64_t> p, std::int64_t n_lo, std::int64_t n_hi,
                         const SieveTables& t) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("series range must satisfy 1 <= n_lo <= n_hi");
  require_in_table(t, n_hi);
  SplitSeries s;
  s.kind = kind;
  s.n_lo = n_lo;
  s.n_hi = n_hi;
  reserve_log_factorials(n_hi);
  struct Point {
    double main = 0.0, rem = 0.0;
    std::int64_t num = 0;
  };
  std::vector<Point> pts;
  if (is_padic(kind)) {
    if (!p) throw ConfigError("p-adic remainder kinds need a prime");
    require_prime(*p);
    s.prime = p;
    s.denominator = *p - 1;
    const int j = kind == SplitKind::p0 ? 0 : kind == SplitKind::p1 ? 1 : 2;
    pts = parallel_map(n_lo, n_hi, [&](std::int64_t n) {
      const ScaledValue r = r_p(j, *p, n, t);
      return Point{phi_p(j, *p, n, t).value(), r.value(), r.num};
    });
  } else if (kind == SplitKind::mikolas) {
    pts = parallel_map(n_lo, n_hi, [&](std::int64_t n) {
      const double main = static_cast<double>(t.phi_sum(n)) - 0.5 * t.psi(n);
      return Point{main, mikolas_remainder(n, t), 0};
    });
  } else {
    pts = parallel_map(n_lo, n_hi, [&](std::int64_t n) {
      const double main = static_cast<double>(phi_inf_1(n, t)) + phi_inf_2(n, t);
      return Point{main, r_inf(n, t), 0};
    });
  }
  for (const auto& pt : pts) {
    s.main.push_back(pt.main);
    s.remainder.push_back(pt.rem);
    if (is_padic(kind)) s.remainder_num.push_back(pt.num);
  }
  return s;
}

JumpReport jump_correlation_report(std::int64_t p, std::int64_t n_limit, const SieveTables& t,
                                   const JumpOptions& options) {
  require_prime(p);
  require_in_table(t, n_limit);
  JumpReport rep;
  rep.p = p;
  rep.n_limit = n_limit;
  rep.options = options;
  const auto inf = split_series(SplitKind::inf, std::nullopt, 1, n_limit, t);
  const auto p1 = split_series(SplitKind::p1, p, 1, n_limit, t);

  for (std::int64_t m = 1; m * (m + 1) <= n_limit; ++m)
    if (t.mu(m) != 0) rep.pronic_squarefree.push_back(m * (m + 1));

  std::vector<double> ratios;
  for (std::int64_t n = 2; n <= n_limit; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const double di = inf.remainder[i] - inf.remainder[i - 1];
    const double dp = -(p1.remainder[i] - p1.remainder[i - 1]);
    const double scale = std::sqrt(static_cast<double>(n));
    const bool ji = std::fabs(di) > options.tau_inf * scale;
    const bool jp = std::fabs(dp) > options.tau_p * scale;
    if (ji) rep.jumps_inf.push_back(n);
    if (jp) rep.jumps_p1.push_back(n);
    if (!ji && !jp) continue;
    JumpPoint row{n, di, dp, 0, 0};
    const std::int64_t m = isqrt(n);
    if (m * (m + 1) == n) {
      row.m = m;
      row.mu_m = t.mu(m);
    }
    rep.rows.push_back(row);
    if (ji && jp) {
      rep.common.push_back(n);
      if (di != 0.0) ratios.push_back(std::fabs(dp) / std::fabs(di));
    }
  }
  rep.median_ratio = median(std::move(ratios));
  return rep;
}

}  // namespace farey
