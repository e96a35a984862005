#include "farey/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace farey {
namespace {

void check_n(std::int64_t n) {
  if (n < 1 || n > kOracleCeiling)
    throw std::out_of_range("oracle needs 1 <= n <= " + std::to_string(kOracleCeiling) + ", got " +
                            std::to_string(n));
}

void check_p(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("oracle prime must be at least 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

bool by_denominator(const FareyFraction& a, const FareyFraction& b) {
  return a.k != b.k ? a.k < b.k : a.h < b.h;
}

struct Kahan {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::vector<FareyFraction> enumerate_farey(std::int64_t n) {
  check_n(n);
  std::vector<FareyFraction> out;
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t h = 1; h <= k; ++h)
      if (std::gcd(h, k) == 1) out.push_back({h, k});
  std::sort(out.begin(), out.end(),
            [](const FareyFraction& a, const FareyFraction& b) { return a.h * b.k < b.h * a.k; });
  return out;
}

std::int64_t oracle_ord(std::int64_t p, std::int64_t m) {
  std::int64_t e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

std::int64_t oracle_ord_f(std::int64_t p, std::int64_t n) {
  check_n(n);
  check_p(p);
  return oracle_ord_f_prefix(p, n).back();
}

std::int64_t oracle_ord_g(std::int64_t p, std::int64_t n) {
  check_n(n);
  check_p(p);
  return oracle_ord_g_prefix(p, n).back();
}

std::vector<std::int64_t> oracle_ord_f_prefix(std::int64_t p, std::int64_t n) {
  check_n(n);
  check_p(p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 0);
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t step = 0;
    const std::int64_t ek = oracle_ord(p, k);
    for (std::int64_t h = 1; h <= k; ++h)
      if (std::gcd(h, k) == 1) step += ek - oracle_ord(p, h);
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] + step;
  }
  return out;
}

std::vector<std::int64_t> oracle_ord_g_prefix(std::int64_t p, std::int64_t n) {
  check_n(n);
  check_p(p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 0);
  for (std::int64_t k = 1; k <= n; ++k) {
    std::int64_t step = 0;
    const std::int64_t ek = oracle_ord(p, k);
    for (std::int64_t h = 1; h <= k; ++h) step += ek - oracle_ord(p, h);
    out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] + step;
  }
  return out;
}

double oracle_log_f(std::int64_t n) {
  Kahan acc;
  for (const auto& f : enumerate_farey(n))
    acc.add(-std::log(static_cast<double>(f.h) / static_cast<double>(f.k)));
  return acc.sum;
}

double oracle_unreduced_log(std::int64_t n) {
  check_n(n);
  Kahan acc;
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t h = 1; h <= k; ++h) acc.add(-std::log(static_cast<double>(h) / static_cast<double>(k)));
  return acc.sum;
}

std::vector<FareyFraction> reduce_all_pairs(std::int64_t n) {
  check_n(n);
  std::vector<FareyFraction> out;
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t h = 1; h <= k; ++h) {
      const std::int64_t g = std::gcd(h, k);
      out.push_back({h / g, k / g});
    }
  std::sort(out.begin(), out.end(), by_denominator);
  return out;
}

std::vector<FareyFraction> farey_union_by_gcd(std::int64_t n) {
  check_n(n);
  std::vector<FareyFraction> out;
  for (std::int64_t g = 1; g <= n; ++g) {
    const auto part = enumerate_farey(n / g);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), by_denominator);
  return out;
}

}  // namespace farey
