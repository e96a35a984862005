#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "farey/csv.hpp"
#include "farey/sieve.hpp"

using namespace farey;

namespace {

// Independent references: gcd counting and trial factorization.
std::int64_t phi_by_gcd(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t h = 1; h <= n; ++h) c += std::gcd(h, n) == 1;
  return c;
}

int mu_by_trial(std::int64_t n) {
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

double psi_by_trial(std::int64_t n) {
  double s = 0.0;
  for (std::int64_t k = 2; k <= n; ++k) {
    std::int64_t p = 2;
    while (k % p) ++p;
    std::int64_t m = k;
    while (m % p == 0) m /= p;
    if (m == 1) s += std::log(static_cast<double>(p));
  }
  return s;
}

const SieveTables& tables() {
  static const SieveTables t = build_tables(10000);
  return t;
}

}  // namespace

TEST_CASE("small tables") {
  const auto t = build_tables(10);
  const int expected_phi[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
  for (int k = 1; k <= 10; ++k) CHECK(t.phi(k) == expected_phi[k - 1]);
  CHECK(t.mertens(10) == -1);
  CHECK(t.mertens(5) == -2);
  CHECK(t.psi(10) == doctest::Approx(std::log(2520.0)).epsilon(1e-12));
  CHECK(t.mertens(1) == 1);
}

TEST_CASE("phi and mu agree with gcd counting and trial factorization") {
  const auto& t = tables();
  for (std::int64_t k = 1; k <= 2000; ++k) {
    REQUIRE(t.phi(k) == phi_by_gcd(k));
    REQUIRE(t.mu(k) == mu_by_trial(k));
  }
  for (std::int64_t k = 2001; k <= 10000; ++k) REQUIRE(t.mu(k) == mu_by_trial(k));
}

TEST_CASE("phi summatory and totient remainder") {
  const auto t = build_tables(10);
  CHECK(phi_summatory(t, 4) == 6);
  CHECK(phi_summatory(t, 1) == 1);
  CHECK(phi_summatory(t, 10) == 32);
  const double c = 3.0 / (std::numbers::pi * std::numbers::pi);
  CHECK(totient_remainder(t, 1) == doctest::Approx(1 - c).epsilon(1e-14));
  CHECK(totient_remainder(t, 1) == doctest::Approx(0.6960).epsilon(1e-4));
  CHECK(totient_remainder(t, 4) == doctest::Approx(6 - 16 * c).epsilon(1e-14));
  CHECK(totient_remainder(t, 4) == doctest::Approx(1.13658).epsilon(1e-5));
  CHECK(totient_remainder(t, 10) == doctest::Approx(1.60364).epsilon(1e-5));
  CHECK(binomial_count(4) == 10);
  CHECK(binomial_count(0) == 0);
  CHECK(binomial_count(100) == 5050);
}

TEST_CASE("table invariants") {
  const auto& t = tables();
  for (std::int64_t n = 1; n <= t.n_max(); ++n) {
    std::int64_t s = 0;
    for (std::int64_t k = 1; k <= n; ++k) s += t.mu(k) * (n / k);
    REQUIRE(s == 1);
    if (n > 1) {
      REQUIRE(t.mertens(n) - t.mertens(n - 1) == t.mu(n));
      REQUIRE(t.phi_sum(n) - t.phi_sum(n - 1) == t.phi(n));
      REQUIRE(t.psi(n) >= t.psi(n - 1));
    }
    const double E = totient_remainder(t, n);
    REQUIRE(std::fabs(E) <= 2.0 * n * std::log(n + 1.0));
  }
  for (std::int64_t n = 1; n <= 3000; ++n) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) s += t.phi(d);
    REQUIRE(s == n);
  }
}

TEST_CASE("psi against trial division") {
  const auto& t = tables();
  double ref = 0.0;
  for (std::int64_t n : {2, 10, 97, 1000, 4096, 10000}) {
    ref = psi_by_trial(n);
    CHECK(std::fabs(t.psi(n) - ref) <= 1e-9 * ref);
  }
}

TEST_CASE("prime powers and smallest prime factors") {
  const auto& t = tables();
  CHECK(t.prime_power_base(8) == 2);
  CHECK(t.prime_power_base(9) == 3);
  CHECK(t.prime_power_base(12) == 0);
  CHECK(t.prime_power_base(1) == 0);
  CHECK(t.spf(91) == 7);
  CHECK(t.is_prime(9973));
  CHECK_FALSE(t.is_prime(1));
  CHECK(t.mertens_floor(0) == 0);
  CHECK(t.mertens_floor(-3) == 0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_tables(0), std::invalid_argument);
  CHECK_THROWS_AS(build_tables(1000, SieveOptions{100}), std::length_error);
  const auto t = build_tables(10);
  CHECK_THROWS_AS(t.phi(11), std::out_of_range);
  CHECK_THROWS_AS(phi_summatory(t, 0), std::out_of_range);
  CHECK_THROWS_AS(totient_remainder(t, 11), std::out_of_range);
}

TEST_CASE("csv dump") {
  const auto t = build_tables(4);
  std::ostringstream s;
  CsvWriter w(s);
  write_sieve_csv(w, t);
  CHECK(s.str() ==
        "k,phi,mu,mertens,phi_sum,psi\n"
        "1,1,1,1,1,0\n"
        "2,1,-1,0,2,0.69314718056\n"
        "3,2,-1,-1,4,1.79175946923\n"
        "4,2,0,-1,6,2.48490664979\n");
}

TEST_CASE("csv writer quoting and formats") {
  std::ostringstream s;
  CsvWriter w(s);
  w.comment("config a=1");
  w.header({"a", "b"});
  w.row({"x,y", "say \"hi\""});
  CHECK(s.str() == "# config a=1\na,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
  std::ostringstream tsv;
  CsvWriter tw(tsv, TextFormat::tsv);
  tw.row({"1", "2"});
  CHECK(tsv.str() == "1\t2\n");
  CHECK(format_fixed(1.49462, 4) == "1.4946");
  CHECK(format_fixed(-0.00001, 4) == "0.0000");
  CHECK(format_float(-0.0) == "0");
  CHECK(format_float(0.1) == "0.1");
}
