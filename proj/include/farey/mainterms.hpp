#pragma once

// Main term / remainder splits of ln F(n) and ord_p(F(n)) along the
// hyperbola: a short explicit sum over k <= K_n plus Mertens-weighted blocks
// over l <= L_n.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "farey/sieve.hpp"

namespace farey {

struct SplitParams {
  std::int64_t n = 0;
  std::int64_t L = 0;  // floor(sqrt n)
  std::int64_t K = 0;  // floor(n / (L + 1))
};

SplitParams split_params(std::int64_t n);

// ln F(n) - Phi(n) + psi(n)/2, n >= 2.
double mikolas_remainder(std::int64_t n, const SieveTables& t);

// (1/2) sum_k mu(k) q(q+1), q = floor(n/k); exact.
std::int64_t phi_inf_1(std::int64_t n, const SieveTables& t);
// sum_{k <= K_n} mu(k) (ln G(q) - q(q+1)/2).
double phi_inf_2(std::int64_t n, const SieveTables& t);

struct InfRemainder {
  double by_blocks = 0.0;      // the l-sum, returned by r_inf
  double by_difference = 0.0;  // ln F(n) - phi_inf_1 - phi_inf_2
  double tolerance = 0.0;
};

// Computes both routes and throws CrossCheckError if they differ by more than
// the tolerance.
InfRemainder r_inf_detail(std::int64_t n, const SieveTables& t);
double r_inf(std::int64_t n, const SieveTables& t);

// Exact rational num / den with den = p - 1.
struct ScaledValue {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return num % den == 0; }
  friend bool operator==(const ScaledValue&, const ScaledValue&) = default;
};

ScaledValue operator+(ScaledValue a, ScaledValue b);
ScaledValue operator-(ScaledValue a, ScaledValue b);

// p-adic main terms j = 0, 1, 2.
ScaledValue phi_p(int j, std::int64_t p, std::int64_t n, const SieveTables& t);
// Remainders by the l-sum; throws CrossCheckError unless
// phi_p + r_p == ord_p(F(n)) exactly.
ScaledValue r_p(int j, std::int64_t p, std::int64_t n, const SieveTables& t);

enum class SplitKind { mikolas, inf, p0, p1, p2 };
std::string_view to_string(SplitKind k);
SplitKind parse_split_kind(std::string_view name);  // throws ConfigError
bool is_padic(SplitKind k);

struct SplitSeries {
  SplitKind kind = SplitKind::inf;
  std::optional<std::int64_t> prime;
  std::int64_t n_lo = 1;
  std::int64_t n_hi = 0;
  std::vector<double> main;
  std::vector<double> remainder;
  // p-adic kinds only: remainder = remainder_num / denominator exactly.
  std::vector<std::int64_t> remainder_num;
  std::int64_t denominator = 1;
};

SplitSeries split_series(SplitKind kind, std::optional<std::int64_t> p, std::int64_t n_lo, std::int64_t n_hi,
                         const SieveTables& t);

struct JumpOptions {
  double tau_inf = 0.75;  // |Delta R_inf(n)| > tau_inf sqrt(n) marks a jump
  double tau_p = 0.75;    // same for -R_{p,1}
};

struct JumpPoint {
  std::int64_t n = 0;
  double delta_inf = 0.0;  // R_inf(n) - R_inf(n-1)
  double delta_p1 = 0.0;   // -(R_{p,1}(n) - R_{p,1}(n-1))
  std::int64_t m = 0;      // n = m(m+1) if such m exists, else 0
  int mu_m = 0;            // mu(m) when m > 0
};

struct JumpReport {
  std::int64_t p = 0;
  std::int64_t n_limit = 0;
  JumpOptions options;
  std::vector<std::int64_t> jumps_inf;
  std::vector<std::int64_t> jumps_p1;
  std::vector<JumpPoint> rows;  // union of both jump sets, ascending n
  std::vector<std::int64_t> common;
  std::vector<std::int64_t> pronic_squarefree;  // m(m+1) <= n_limit, m squarefree
  double median_ratio = 0.0;  // median |delta_p1| / |delta_inf| over common points
};

JumpReport jump_correlation_report(std::int64_t p, std::int64_t n_limit, const SieveTables& t,
                                   const JumpOptions& options = {});

}  // namespace farey
