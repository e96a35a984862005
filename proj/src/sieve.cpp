#include "farey/sieve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "farey/csv.hpp"

namespace farey {

void SieveTables::check_index(std::int64_t k) const {
  if (k < 1 || k > n_max_) {
    throw std::out_of_range("sieve index " + std::to_string(k) + " outside [1, " +
                            std::to_string(n_max_) + "]");
  }
}

std::int32_t SieveTables::phi(std::int64_t k) const {
  check_index(k);
  return phi_[k];
}

int SieveTables::mu(std::int64_t k) const {
  check_index(k);
  return mu_[k];
}

std::int64_t SieveTables::mertens(std::int64_t k) const {
  check_index(k);
  return mertens_[k];
}

std::int64_t SieveTables::phi_sum(std::int64_t k) const {
  check_index(k);
  return phi_sum_[k];
}

double SieveTables::psi(std::int64_t k) const {
  check_index(k);
  return psi_[k];
}

std::int32_t SieveTables::spf(std::int64_t k) const {
  check_index(k);
  return spf_[k];
}

std::int32_t SieveTables::prime_power_base(std::int64_t k) const {
  check_index(k);
  return pp_base_[k];
}

SieveTables build_tables(std::int64_t n_max, const SieveOptions& options) {
  if (n_max < 1) {
    throw std::invalid_argument("n_max must be positive");
  }
  if (n_max > options.max_entries) {
    throw std::length_error("n_max " + std::to_string(n_max) + " exceeds the table ceiling " +
                            std::to_string(options.max_entries));
  }

  SieveTables t;
  t.n_max_ = n_max;
  const auto len = static_cast<std::size_t>(n_max) + 1;
  t.phi_.assign(len, 0);
  t.mu_.assign(len, 0);
  t.spf_.assign(len, 0);
  t.pp_base_.assign(len, 0);

  std::vector<std::int32_t> primes;
  t.phi_[1] = 1;
  t.mu_[1] = 1;
  t.spf_[1] = 1;
  for (std::int64_t i = 2; i <= n_max; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::int32_t>(i);
      t.phi_[i] = static_cast<std::int32_t>(i - 1);
      t.mu_[i] = -1;
      primes.push_back(static_cast<std::int32_t>(i));
    }
    for (const std::int32_t p : primes) {
      const std::int64_t ip = i * p;
      if (p > t.spf_[i] || ip > n_max) break;
      t.spf_[ip] = p;
      if (p == t.spf_[i]) {
        t.phi_[ip] = t.phi_[i] * p;
        t.mu_[ip] = 0;
      } else {
        t.phi_[ip] = t.phi_[i] * (p - 1);
        t.mu_[ip] = static_cast<std::int8_t>(-t.mu_[i]);
      }
    }
  }

  // Prime powers: k = p * (k / p) is a power of p exactly when k / p is 1 or
  // itself a power of p.
  for (std::int64_t k = 2; k <= n_max; ++k) {
    const std::int32_t p = t.spf_[k];
    const std::int64_t rest = k / p;
    if (rest == 1 || t.pp_base_[rest] == p) t.pp_base_[k] = p;
  }

  t.mertens_.assign(len, 0);
  t.phi_sum_.assign(len, 0);
  t.psi_.assign(len, 0.0);
  double psi_sum = 0.0;
  double psi_comp = 0.0;  // Kahan compensation
  for (std::int64_t k = 1; k <= n_max; ++k) {
    t.mertens_[k] = t.mertens_[k - 1] + t.mu_[k];
    t.phi_sum_[k] = t.phi_sum_[k - 1] + t.phi_[k];
    if (t.pp_base_[k] != 0) {
      const double y = std::log(static_cast<double>(t.pp_base_[k])) - psi_comp;
      const double s = psi_sum + y;
      psi_comp = (s - psi_sum) - y;
      psi_sum = s;
    }
    t.psi_[k] = psi_sum;
  }
  return t;
}

std::int64_t phi_summatory(const SieveTables& t, std::int64_t n) { return t.phi_sum(n); }

double totient_remainder(const SieveTables& t, std::int64_t n) {
  const auto x = static_cast<double>(n);
  return static_cast<double>(t.phi_sum(n)) - 3.0 * x * x / (std::numbers::pi * std::numbers::pi);
}

void write_sieve_csv(CsvWriter& out, const SieveTables& t) {
  out.header({"k", "phi", "mu", "mertens", "phi_sum", "psi"});
  for (std::int64_t k = 1; k <= t.n_max(); ++k) {
    out.row({CsvWriter::cell(k), CsvWriter::cell(std::int64_t{t.phi(k)}),
             CsvWriter::cell(std::int64_t{t.mu(k)}), CsvWriter::cell(t.mertens(k)),
             CsvWriter::cell(t.phi_sum(k)), CsvWriter::cell(t.psi(k))});
  }
}

}  // namespace farey
