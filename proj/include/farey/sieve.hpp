#pragma once

// Arithmetic prefix tables: Euler phi, Moebius mu, Mertens M, the totient
// summatory Phi, von Mangoldt prime-power markers and Chebyshev psi.
//
// Memory: about 34 bytes per entry (phi 4, mu 1, mertens 4, phi_sum 8,
// psi 8, spf 4, prime-power base 4 + padding), so n_max = 1e7 is ~340 MB.

#include <cstdint>
#include <span>
#include <vector>

namespace farey {

struct SieveOptions {
  // Hard ceiling on table length. Phi(n) ~ 0.304 n^2 stays far inside a
  // signed 64-bit integer at this bound.
  std::int64_t max_entries = 100'000'000;
};

class SieveTables {
 public:
  SieveTables() = default;

  std::int64_t n_max() const { return n_max_; }

  // Point queries; all require 1 <= k <= n_max and throw std::out_of_range otherwise.
  std::int32_t phi(std::int64_t k) const;
  int mu(std::int64_t k) const;
  std::int64_t mertens(std::int64_t k) const;
  std::int64_t phi_sum(std::int64_t k) const;
  double psi(std::int64_t k) const;
  // Smallest prime factor of k (1 for k = 1).
  std::int32_t spf(std::int64_t k) const;
  // Base prime p if k = p^m, m >= 1, otherwise 0.
  std::int32_t prime_power_base(std::int64_t k) const;
  bool is_prime(std::int64_t k) const { return k >= 2 && spf(k) == k; }

  // Step-function extension used by the hyperbola splits: M(x) = 0 for x < 1.
  std::int64_t mertens_floor(std::int64_t x) const {
    return x < 1 ? 0 : mertens(x);
  }

  // Raw views, index 0 is a sentinel (zero).
  std::span<const std::int8_t> mu_table() const { return mu_; }
  std::span<const std::int32_t> mertens_table() const { return mertens_; }
  std::span<const std::int64_t> phi_sum_table() const { return phi_sum_; }

 private:
  friend SieveTables build_tables(std::int64_t n_max, const SieveOptions& options);

  void check_index(std::int64_t k) const;

  std::int64_t n_max_ = 0;
  std::vector<std::int32_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int32_t> mertens_;
  std::vector<std::int64_t> phi_sum_;
  std::vector<double> psi_;
  std::vector<std::int32_t> spf_;
  std::vector<std::int32_t> pp_base_;
};

// Linear (Euler) sieve for phi, mu and smallest prime factors, followed by
// prefix scans. Throws std::invalid_argument for n_max < 1 and
// std::length_error above options.max_entries.
SieveTables build_tables(std::int64_t n_max, const SieveOptions& options = {});

// Phi(n) = sum_{k<=n} phi(k), the number of positive Farey fractions of order n.
std::int64_t phi_summatory(const SieveTables& t, std::int64_t n);

// E(n) = Phi(n) - 3 n^2 / pi^2.
double totient_remainder(const SieveTables& t, std::int64_t n);

// Phi*(n) = n(n+1)/2, the number of unreduced fractions h/k with 1 <= h <= k <= n.
constexpr std::int64_t binomial_count(std::int64_t n) { return n * (n + 1) / 2; }

class CsvWriter;

// Header row plus one row per k: k,phi,mu,mertens,phi_sum,psi (psi at 12
// significant digits).
void write_sieve_csv(CsvWriter& out, const SieveTables& t);

}  // namespace farey
