#include "farey/products.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "farey/errors.hpp"
#include "farey/hyperbola.hpp"
#include "farey/log_binomial.hpp"
#include "farey/oracle.hpp"
#include "farey/parallel.hpp"
#include "farey/radix.hpp"

namespace farey {
namespace {

constexpr std::int64_t kValueGuard = std::int64_t{1} << 62;

void require_prime(std::int64_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_in_table(const SieveTables& t, std::int64_t n) {
  if (n < 1 || n > t.n_max())
    throw std::out_of_range("n = " + std::to_string(n) + " outside sieve range [1, " + std::to_string(t.n_max()) +
                            "]");
}

std::int64_t guarded(std::int64_t v) {
  if (v >= kValueGuard || v <= -kValueGuard) throw std::overflow_error("valuation magnitude exceeds 2^62");
  return v;
}

// (2 S_b(n) - (n-1) d_b(n)) / (b-1) with the divisibility asserted.
std::int64_t digit_valuation(std::int64_t b, std::int64_t n) {
  const std::int64_t num = 2 * digit_summatory(b, n) - (n - 1) * digit_sum(b, n);
  if (num % (b - 1) != 0)
    throw CrossCheckError("digit formula not divisible by b-1 at b=" + std::to_string(b) + ", n=" + std::to_string(n));
  return num / (b - 1);
}

std::vector<std::int64_t> digit_valuation_table(std::int64_t b, std::int64_t n_max) {
  std::vector<std::int64_t> g(static_cast<std::size_t>(n_max + 1), 0);
  for (std::int64_t n = 1; n <= n_max; ++n) g[static_cast<std::size_t>(n)] = digit_valuation(b, n);
  return g;
}

std::int64_t invert_table(const std::vector<std::int64_t>& g, std::int64_t n, const SieveTables& t) {
  std::int64_t sum = 0;
  for_each_mobius_block(t, n, [&](std::int64_t q, std::int64_t w) { sum += w * g[static_cast<std::size_t>(q)]; });
  return guarded(sum);
}

std::int64_t invert_digit_valuation(std::int64_t b, std::int64_t n, const SieveTables& t) {
  std::int64_t sum = 0;
  for_each_mobius_block(t, n, [&](std::int64_t q, std::int64_t w) { sum += w * digit_valuation(b, q); });
  return guarded(sum);
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::inversion: return "inversion";
    case Method::direct: return "direct";
    case Method::oracle: return "oracle";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "inversion") return Method::inversion;
  if (name == "direct") return Method::direct;
  if (name == "oracle") return Method::oracle;
  throw ConfigError("unknown method '" + std::string(name) + "' (expected inversion, direct or oracle)");
}

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t ord_g(std::int64_t p, std::int64_t n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("ord_g needs n >= 1");
  return digit_valuation(p, n);
}

std::int64_t nu_b_g(std::int64_t b, std::int64_t n) {
  if (b < 2) throw std::invalid_argument("base must be at least 2");
  if (n < 1) throw std::invalid_argument("nu_b_g needs n >= 1");
  return digit_valuation(b, n);
}

std::int64_t ord_f_inversion(std::int64_t p, std::int64_t n, const SieveTables& t) {
  require_prime(p);
  require_in_table(t, n);
  return invert_digit_valuation(p, n, t);
}

std::int64_t nu_b_f(std::int64_t b, std::int64_t n, const SieveTables& t) {
  if (b < 2) throw std::invalid_argument("base must be at least 2");
  require_in_table(t, n);
  return invert_digit_valuation(b, n, t);
}

std::int64_t ord_d(std::int64_t p, std::int64_t n, const SieveTables& t) {
  require_prime(p);
  require_in_table(t, n);
  std::int64_t total = 0;
  for (std::int64_t pb = p; pb <= n; pb *= p)
    for (std::int64_t m = pb; m <= n; m += pb) total += t.phi(m);
  return guarded(total);
}

std::int64_t ord_n(std::int64_t p, std::int64_t n, const SieveTables& t) {
  require_prime(p);
  require_in_table(t, n);
  std::int64_t total = 0;
  std::vector<std::int64_t> primes;
  for (std::int64_t pb = p; pb <= n; pb *= p) {
    for (std::int64_t a = 1; a * pb <= n; ++a) {
      const std::int64_t m = a * pb;
      // numerators h = m: count denominators k in (m, n] coprime to m
      total += static_cast<std::int64_t>(t.phi(m)) * (n / m - 1);
      const std::int64_t d = n % m;
      if (d == 0) continue;
      primes.assign(1, p);
      for (std::int64_t x = a; x > 1;) {
        const std::int64_t q = t.spf(x);
        if (q != p) primes.push_back(q);
        while (x % q == 0) x /= q;
      }
      // sum over squarefree j | rad(a p) of mu(j) floor(d / j)
      const std::size_t subsets = std::size_t{1} << primes.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::int64_t j = 1;
        int sign = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
          if (mask & (std::size_t{1} << i)) {
            j *= primes[i];
            sign = -sign;
          }
        total += sign * (d / j);
      }
    }
  }
  return guarded(total);
}

std::int64_t ord_f_direct(std::int64_t p, std::int64_t n, const SieveTables& t) {
  return ord_d(p, n, t) - ord_n(p, n, t);
}

std::int64_t ord_f_psq_closed(std::int64_t p, const SieveTables& t) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("the p^2 - 1 closed form needs an odd prime");
  require_in_table(t, p - 1);
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k <= p - 1; ++k) {
    const int mu = t.mu(k);
    if (mu == 0) continue;
    const std::int64_t b = (p * p - 1) / k - p * ((p - 1) / k);
    sum += mu * ((p - 1) / k) * b;
  }
  return (p - 1) - sum;
}

long double log_f_ld(std::int64_t n, const SieveTables& t) {
  require_in_table(t, n);
  long double sum = 0.0L;
  for_each_mobius_block(t, n, [&](std::int64_t q, std::int64_t w) {
    if (q > 1) sum += static_cast<long double>(w) * log_g_exact_ld(q);
  });
  return sum;
}

double log_f(std::int64_t n, const SieveTables& t) { return static_cast<double>(log_f_ld(n, t)); }

double log_f_error_bound(std::int64_t n, const SieveTables& t) {
  require_in_table(t, n);
  long double sum = 0.0L, peak = 0.0L;
  std::int64_t terms = 0;
  for_each_mobius_block(t, n, [&](std::int64_t q, std::int64_t w) {
    if (q > 1) sum += static_cast<long double>(w) * log_g_exact_ld(q);
    peak = std::max(peak, std::fabs(sum));
    ++terms;
  });
  const long double accumulated = 4.0L * LDBL_EPSILON * static_cast<long double>(terms) * peak;
  return static_cast<double>(accumulated) + 0.5 * DBL_EPSILON * std::fabs(static_cast<double>(sum));
}

LowestTerms lowest_terms_logs(std::int64_t n, const SieveTables& t) {
  require_in_table(t, n);
  LowestTerms out;
  out.n = n;
  long double num = 0.0L, den = 0.0L;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (!t.is_prime(p)) continue;
    const std::int64_t v = invert_digit_valuation(p, n, t);
    const long double lp = std::log(static_cast<long double>(p));
    if (v > 0) den += v * lp;
    if (v < 0) num += -v * lp;
  }
  out.log_Nhat = static_cast<double>(num);
  out.log_Dhat = static_cast<double>(den);
  return out;
}

std::vector<std::int64_t> integer_farey_scan(std::int64_t n_limit, const SieveTables& t) {
  if (n_limit < 1) return {};
  require_in_table(t, n_limit);
  auto flags = parallel_map(1, n_limit, [&](std::int64_t n) {
    for (std::int64_t p = 2; p <= n; ++p)
      if (t.is_prime(p) && invert_digit_valuation(p, n, t) < 0) return 0;
    return 1;
  });
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.push_back(static_cast<std::int64_t>(i) + 1);
  return out;
}

ValuationSeries ord_g_series(std::int64_t p, std::int64_t n_lo, std::int64_t n_hi) {
  require_prime(p);
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("series range must satisfy 1 <= n_lo <= n_hi");
  ValuationSeries s{p, n_lo, n_hi, {}, Method::inversion};
  s.values = parallel_map(n_lo, n_hi, [p](std::int64_t n) { return digit_valuation(p, n); });
  return s;
}

ValuationSeries ord_f_series(std::int64_t p, std::int64_t n_lo, std::int64_t n_hi, const SieveTables& t,
                             Method method) {
  require_prime(p);
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("series range must satisfy 1 <= n_lo <= n_hi");
  ValuationSeries s{p, n_lo, n_hi, {}, method};
  switch (method) {
    case Method::inversion: {
      require_in_table(t, n_hi);
      const auto g = digit_valuation_table(p, n_hi);
      s.values = parallel_map(n_lo, n_hi, [&](std::int64_t n) { return invert_table(g, n, t); });
      break;
    }
    case Method::direct:
      require_in_table(t, n_hi);
      s.values = parallel_map(n_lo, n_hi, [&](std::int64_t n) { return ord_f_direct(p, n, t); });
      break;
    case Method::oracle: {
      const auto all = oracle_ord_f_prefix(p, n_hi);
      s.values.assign(all.begin() + n_lo, all.end());
      break;
    }
  }
  return s;
}

LogSeries log_series(LogSeries::Kind kind, std::int64_t n_lo, std::int64_t n_hi, const SieveTables& t) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("series range must satisfy 1 <= n_lo <= n_hi");
  LogSeries s;
  s.kind = kind;
  s.n_lo = n_lo;
  s.n_hi = n_hi;
  reserve_log_factorials(n_hi);
  if (kind == LogSeries::Kind::logG) {
    s.values = parallel_map(n_lo, n_hi, [](std::int64_t n) { return log_g_exact(n); });
    s.error_bounds.resize(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i)
      s.error_bounds[i] = 4.0 * DBL_EPSILON * static_cast<double>(n_lo + static_cast<std::int64_t>(i)) *
                          std::fabs(s.values[i]);
  } else {
    require_in_table(t, n_hi);
    s.values = parallel_map(n_lo, n_hi, [&](std::int64_t n) { return log_f(n, t); });
    s.error_bounds = parallel_map(n_lo, n_hi, [&](std::int64_t n) { return log_f_error_bound(n, t); });
  }
  return s;
}

PropertyReport property_scan(std::int64_t p, std::int64_t n_limit, const SieveTables& t) {
  require_prime(p);
  require_in_table(t, n_limit);
  PropertyReport r;
  r.p = p;
  r.n_limit = n_limit;
  const auto series = ord_f_series(p, 1, n_limit, t);
  std::int64_t k = 1;
  for (std::int64_t pk = p; pk - 1 <= n_limit; pk *= p, ++k) {
    if (pk - 1 >= 1) {
      const std::int64_t v = series.at(pk - 1);
      r.at_power_minus_one.push_back({k, pk - 1, v});
      if (v > 0) r.p1_violations.push_back(k);
    }
    if (pk <= n_limit) {
      const std::int64_t v = series.at(pk);
      r.at_power.push_back({k, pk, v});
      if (v <= 0) r.p2_violations.push_back(k);
    }
    if (pk > std::numeric_limits<std::int64_t>::max() / p) break;
  }
  const double lp = std::log(static_cast<double>(p));
  for (std::int64_t n = 1; n <= n_limit; ++n) {
    const std::int64_t v = series.at(n);
    (v > 0 ? r.positive : v < 0 ? r.negative : r.zero) += 1;
    if (n >= 2) {
      const double ratio = std::fabs(static_cast<double>(v)) / (static_cast<double>(n) * std::log(static_cast<double>(n)) / lp);
      if (ratio > r.max_growth_ratio) {
        r.max_growth_ratio = ratio;
        r.max_growth_at = n;
      }
    }
  }
  return r;
}

std::vector<TableRow> power_table(std::int64_t p, std::int64_t max_power, const SieveTables& t) {
  require_prime(p);
  if (max_power < 1) throw std::invalid_argument("max_power must be at least 1");
  std::vector<TableRow> rows;
  std::int64_t pr = 1;
  for (std::int64_t r = 1; r <= max_power; ++r) {
    pr *= p;
    TableRow row;
    row.r = r;
    row.N = pr - 1;
    require_in_table(t, row.N);
    row.ord = invert_digit_valuation(p, row.N, t);
    const double N = static_cast<double>(row.N);
    const double v = static_cast<double>(row.ord);
    row.ord_over_N = row.ord == 0 ? 0.0 : -v / N;
    const double NlogN = N * std::log(N) / std::log(static_cast<double>(p));
    row.ord_over_NlogN = (row.ord == 0 || NlogN == 0.0) ? 0.0 : -v / NlogN;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace farey
