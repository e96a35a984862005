#pragma once

// Sizes of the unreduced Farey product: ln G(n) = sum_j ln C(n, j).

#include <cstdint>

namespace farey {

// exp(1/12 - zeta'(-1)).
inline constexpr long double kGlaisherKinkelin = 1.28242712910062263687L;

// ln G(n) = (n+1) ln n! - 2 sum_{k<=n} ln k!, from a lazily grown table of
// log-factorials (long double, compensated). Safe to call from many threads.
double log_g_exact(std::int64_t n);

// Same quantity in long double, for callers that difference large values.
long double log_g_exact_ld(std::int64_t n);

// n^2/2 - (n/2) ln n + (1 - ln sqrt(2 pi)) n - (1/3) ln n + g0,
// g0 = -ln(2 pi)/2 - 1/12 + 2 ln A.
double log_g_asymptotic(std::int64_t n);

// Grow the table eagerly (useful before a parallel sweep).
void reserve_log_factorials(std::int64_t n);

}  // namespace farey
