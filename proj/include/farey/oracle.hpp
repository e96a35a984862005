#pragma once

// Brute-force reference values: enumerate fractions directly and take prime
// exponents by repeated division. Shares no code with the sieve or digit
// formulas on purpose.

#include <cstdint>
#include <vector>

namespace farey {

inline constexpr std::int64_t kOracleCeiling = 5000;

struct FareyFraction {
  std::int64_t h = 0;
  std::int64_t k = 1;
  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

// Reduced h/k with 1 <= h <= k <= n in increasing order. Throws
// std::out_of_range unless 1 <= n <= kOracleCeiling.
std::vector<FareyFraction> enumerate_farey(std::int64_t n);

// Exponent of p in m >= 1 by repeated division.
std::int64_t oracle_ord(std::int64_t p, std::int64_t m);

std::int64_t oracle_ord_f(std::int64_t p, std::int64_t n);
double oracle_log_f(std::int64_t n);
std::int64_t oracle_ord_g(std::int64_t p, std::int64_t n);
double oracle_unreduced_log(std::int64_t n);

// ord_p(F(m)) for every 0 <= m <= n (entry 0 is 0), accumulated denominator by
// denominator in one Theta(n^2) pass.
std::vector<std::int64_t> oracle_ord_f_prefix(std::int64_t p, std::int64_t n);
std::vector<std::int64_t> oracle_ord_g_prefix(std::int64_t p, std::int64_t n);

// All pairs h <= k <= n reduced to lowest terms, and the union over g of the
// reduced sets of order floor(n/g). Both returned sorted by (k, h).
std::vector<FareyFraction> reduce_all_pairs(std::int64_t n);
std::vector<FareyFraction> farey_union_by_gcd(std::int64_t n);

}  // namespace farey
