#pragma once

// Sums of the form sum_{k=1}^{n} mu(k) f(floor(n/k)), grouped into the
// ~2 sqrt(n) blocks on which floor(n/k) is constant. Each block contributes
// f(q) (M(hi) - M(lo-1)).

#include <cmath>
#include <cstdint>

#include "farey/sieve.hpp"

namespace farey {

inline std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Calls visit(q, weight) once per distinct q = floor(n/k), weight = sum of
// mu(k) over that block. Blocks with zero weight are skipped.
template <typename Visit>
void for_each_mobius_block(const SieveTables& t, std::int64_t n, Visit&& visit) {
  auto M = t.mertens_table();
  for (std::int64_t lo = 1; lo <= n;) {
    const std::int64_t q = n / lo;
    const std::int64_t hi = n / q;
    const std::int64_t w = static_cast<std::int64_t>(M[hi]) - M[lo - 1];
    if (w != 0) visit(q, w);
    lo = hi + 1;
  }
}

// Short explicit sum: calls visit(q, mu(k)) for 1 <= k <= limit with mu(k) != 0.
template <typename Visit>
void for_each_mobius_term(const SieveTables& t, std::int64_t n, std::int64_t limit, Visit&& visit) {
  auto mu = t.mu_table();
  for (std::int64_t k = 1; k <= limit; ++k)
    if (mu[k] != 0) visit(n / k, static_cast<std::int64_t>(mu[k]));
}

}  // namespace farey
