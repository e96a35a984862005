#pragma once

// Valuations and sizes of the Farey product F(n) = prod 1/(h/k) over reduced
// h/k in (0,1], and of the unreduced product G(n) over all 1 <= h <= k <= n.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "farey/sieve.hpp"

namespace farey {

enum class Method { inversion, direct, oracle };

std::string_view to_string(Method m);
// Throws ConfigError for unknown names.
Method parse_method(std::string_view name);

// Trial division; for argument validation only.
bool is_prime_number(std::int64_t p);

// ord_p(G(n)) = (2 S_p(n) - (n-1) d_p(n)) / (p-1). Throws std::invalid_argument
// unless p is prime and n >= 1.
std::int64_t ord_g(std::int64_t p, std::int64_t n);

// The same expression for any base b >= 2.
std::int64_t nu_b_g(std::int64_t b, std::int64_t n);

// Möbius inversion sum_l mu(l) ord_p(G(floor(n/l))), block-decomposed.
std::int64_t ord_f_inversion(std::int64_t p, std::int64_t n, const SieveTables& t);
std::int64_t nu_b_f(std::int64_t b, std::int64_t n, const SieveTables& t);

// ord_p of the product of all denominators / numerators of reduced h/k, k <= n.
std::int64_t ord_d(std::int64_t p, std::int64_t n, const SieveTables& t);
std::int64_t ord_n(std::int64_t p, std::int64_t n, const SieveTables& t);
std::int64_t ord_f_direct(std::int64_t p, std::int64_t n, const SieveTables& t);

// ord_p(F(p^2 - 1)) by the closed form; p must be an odd prime with p - 1 <= t.n_max().
std::int64_t ord_f_psq_closed(std::int64_t p, const SieveTables& t);

// ln F(n) = sum_l mu(l) ln G(floor(n/l)).
double log_f(std::int64_t n, const SieveTables& t);
long double log_f_ld(std::int64_t n, const SieveTables& t);
// Rounding bound for log_f: 4 eps * terms * max|partial sum| (plus the final cast).
double log_f_error_bound(std::int64_t n, const SieveTables& t);

struct LowestTerms {
  std::int64_t n = 0;
  double log_Nhat = 0.0;
  double log_Dhat = 0.0;
};

// Sizes of numerator and denominator of F(n) in lowest terms.
LowestTerms lowest_terms_logs(std::int64_t n, const SieveTables& t);

// All n <= n_limit for which F(n) is an integer.
std::vector<std::int64_t> integer_farey_scan(std::int64_t n_limit, const SieveTables& t);

struct ValuationSeries {
  std::int64_t base = 0;
  std::int64_t n_lo = 1;
  std::int64_t n_hi = 0;
  std::vector<std::int64_t> values;  // values[i] belongs to n_lo + i
  Method method = Method::inversion;

  std::int64_t at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - n_lo)); }
};

struct LogSeries {
  enum class Kind { logF, logG };
  Kind kind = Kind::logF;
  std::int64_t n_lo = 1;
  std::int64_t n_hi = 0;
  std::vector<double> values;
  std::vector<double> error_bounds;
};

// ord_p(G(n)) for n_lo <= n <= n_hi.
ValuationSeries ord_g_series(std::int64_t p, std::int64_t n_lo, std::int64_t n_hi);
// ord_p(F(n)) over a range by the chosen method (parallel over n).
ValuationSeries ord_f_series(std::int64_t p, std::int64_t n_lo, std::int64_t n_hi, const SieveTables& t,
                             Method method = Method::inversion);
LogSeries log_series(LogSeries::Kind kind, std::int64_t n_lo, std::int64_t n_hi, const SieveTables& t);

struct PowerRow {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t value = 0;
};

struct PropertyReport {
  std::int64_t p = 0;
  std::int64_t n_limit = 0;
  std::vector<PowerRow> at_power_minus_one;  // ord_p(F(p^k - 1)) for p^k - 1 <= n_limit
  std::vector<PowerRow> at_power;            // ord_p(F(p^k)) for p^k <= n_limit
  std::vector<std::int64_t> p1_violations;   // k with ord_p(F(p^k - 1)) > 0
  std::vector<std::int64_t> p2_violations;   // k with ord_p(F(p^k)) <= 0
  std::int64_t positive = 0, negative = 0, zero = 0;  // over 1 <= n <= n_limit
  double max_growth_ratio = 0.0;  // max |ord| / (n log_p n), 2 <= n <= n_limit
  std::int64_t max_growth_at = 0;
};

PropertyReport property_scan(std::int64_t p, std::int64_t n_limit, const SieveTables& t);

// Rows r = 1..max_power at N = p^r - 1 with -ord/N and -ord/(N log_p N).
struct TableRow {
  std::int64_t r = 0;
  std::int64_t N = 0;
  std::int64_t ord = 0;
  double ord_over_N = 0.0;
  double ord_over_NlogN = 0.0;
};

std::vector<TableRow> power_table(std::int64_t p, std::int64_t max_power, const SieveTables& t);

}  // namespace farey
