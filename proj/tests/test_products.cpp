#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "farey/log_binomial.hpp"
#include "farey/oracle.hpp"
#include "farey/products.hpp"

using namespace farey;

namespace {

const SieveTables& tables() {
  static const SieveTables t = build_tables(20000);
  return t;
}

}  // namespace

TEST_CASE("ord_p of the unreduced product") {
  CHECK(ord_g(2, 4) == 5);   // G(4) = 96
  CHECK(ord_g(2, 7) == 0);
  CHECK(ord_g(2, 8) == 17);
  CHECK(ord_g(3, 4) == 1);
  CHECK(ord_g(3, 8) == 0);
  CHECK_THROWS_AS(ord_g(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(ord_g(2, 0), std::invalid_argument);
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto ref = oracle_ord_g_prefix(p, 500);
    for (std::int64_t n = 1; n <= 500; ++n) REQUIRE(ord_g(p, n) == ref[n]);
  }
}

TEST_CASE("bounds on ord_p(G(n))") {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t n = 2; n <= 20000; ++n) {
      const std::int64_t v = ord_g(p, n);
      REQUIRE(v >= 0);
      REQUIRE(static_cast<double>(v) < n * std::log(static_cast<double>(n)) / std::log(static_cast<double>(p)));
    }
    for (std::int64_t pk = p; pk <= 1000000; pk *= p) REQUIRE(ord_g(p, pk - 1) == 0);
  }
}

TEST_CASE("composite bases") {
  CHECK(nu_b_g(10, 9) == 0);
  CHECK(nu_b_g(4, 4) == 3);
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t n = 1; n <= 10000; ++n) REQUIRE(nu_b_g(p, n) == ord_g(p, n));
  const auto& t = tables();
  CHECK(nu_b_f(10, 1, t) == 0);
  CHECK(nu_b_f(6, 1, t) == 0);
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t n = 1; n <= 2000; ++n) REQUIRE(nu_b_f(p, n, t) == ord_f_inversion(p, n, t));
  // naive n-term sum for base 10
  for (std::int64_t n = 1; n <= 100; ++n) {
    std::int64_t s = 0;
    for (std::int64_t l = 1; l <= n; ++l) s += t.mu(l) * nu_b_g(10, n / l);
    REQUIRE(nu_b_f(10, n, t) == s);
  }
}

TEST_CASE("log of the unreduced product") {
  CHECK(log_g_exact(4) == doctest::Approx(std::log(96.0)).epsilon(1e-13));
  CHECK(log_g_exact(1) == 0.0);
  CHECK(log_g_exact(6) == doctest::Approx(std::log(162000.0)).epsilon(1e-13));
  CHECK(log_g_exact(5) == doctest::Approx(oracle_unreduced_log(5)).epsilon(1e-13));
  CHECK(static_cast<double>(kGlaisherKinkelin) == doctest::Approx(1.282427).epsilon(1e-6));
  for (std::int64_t n = 50; n <= 10000; ++n)
    REQUIRE(std::fabs(log_g_exact(n) - log_g_asymptotic(n)) <= 10.0 / n);
  CHECK(std::fabs(log_g_exact(1000) - log_g_asymptotic(1000)) < 0.01);
  for (std::int64_t n = 1; n <= 300; ++n)
    REQUIRE(log_g_exact(n) == doctest::Approx(oracle_unreduced_log(n)).epsilon(1e-10));
}

TEST_CASE("ord_p(F(n)) worked values") {
  const auto& t = tables();
  CHECK(ord_f_inversion(2, 4, t) == 4);   // F(4) = 48
  CHECK(ord_f_inversion(2, 7, t) == -1);  // F(7) = 3 5^2 7^6 / 2
  CHECK(ord_f_inversion(7, 7, t) == 6);
  CHECK(ord_f_inversion(2, 31, t) == -19);
  CHECK(ord_f_direct(5, 5, t) == 4);
  CHECK(ord_f_direct(3, 8, t) == -1);
  CHECK(ord_f_direct(2, 8, t) == 11);
  CHECK(ord_d(2, 4, t) == 5);
  CHECK(ord_n(2, 4, t) == 1);
  for (std::int64_t p = 2; p < 500; ++p) {
    if (!t.is_prime(p)) continue;
    REQUIRE(ord_d(p, p, t) == p - 1);
    REQUIRE(ord_n(p, p, t) == 0);
  }
  CHECK_THROWS_AS(ord_f_inversion(2, 20001, t), std::out_of_range);
}

TEST_CASE("denominator and numerator valuations against enumeration") {
  const auto& t = tables();
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t n : {1, 7, 50, 199}) {
      std::int64_t den = 0, num = 0;
      for (const auto& f : enumerate_farey(n)) {
        den += oracle_ord(p, f.k);
        num += oracle_ord(p, f.h);
      }
      REQUIRE(ord_d(p, n, t) == den);
      REQUIRE(ord_n(p, n, t) == num);
    }
  }
  // ord_2(D_n)/n^2 tends to p/(p^2-1) 3/pi^2.
  const double limit = 2.0 / 3.0 * 3.0 / (std::numbers::pi * std::numbers::pi);
  CHECK(std::fabs(ord_d(2, 10000, t) / 1e8 - limit) < 1e-3);
}

TEST_CASE("three-way agreement") {
  const auto& t = tables();
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto ref = oracle_ord_f_prefix(p, 300);
    for (std::int64_t n = 1; n <= 300; ++n) {
      REQUIRE(ord_f_inversion(p, n, t) == ref[n]);
      REQUIRE(ord_f_direct(p, n, t) == ref[n]);
    }
  }
}

TEST_CASE("reconstruction of ord_p(G(n)) from ord_p(F)") {
  const auto& t = tables();
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto s = ord_f_series(p, 1, 2000, t);
    for (std::int64_t n = 1; n <= 2000; ++n) {
      std::int64_t total = 0;
      for (std::int64_t l = 1; l <= n; ++l) total += s.at(n / l);
      REQUIRE(total == ord_g(p, n));
    }
  }
}

TEST_CASE("jump law at prime powers") {
  const auto& t = tables();
  for (std::int64_t p = 2; p <= 10000; ++p) {
    if (!t.is_prime(p)) continue;
    std::int64_t k = 1, pk1 = 1;
    for (std::int64_t pk = p; pk <= 10000; pk *= p, ++k, pk1 *= p)
      REQUIRE(ord_f_inversion(p, pk, t) - ord_f_inversion(p, pk - 1, t) == k * pk1 * (p - 1));
  }
}

TEST_CASE("growth bound and negativity window") {
  const auto& t = tables();
  for (std::int64_t p : {2, 3, 5}) {
    const auto s = ord_f_series(p, 2, 20000, t);
    // n = 2, p = 2 is the one exception: ord_2(F(2)) = 1 > 2 (ln 2)^2.
    for (std::int64_t n = 3; n <= 20000; ++n) {
      const double l = std::log(static_cast<double>(n));
      REQUIRE(std::fabs(static_cast<double>(s.at(n))) <= n * l * l);
    }
  }
  CHECK(ord_f_inversion(2, 2, t) == 1);
  CHECK(1.0 > 2.0 * std::log(2.0) * std::log(2.0));
  for (std::int64_t p = 3; p <= 97; ++p) {
    if (!t.is_prime(p)) continue;
    for (std::int64_t n = (8 * p + 2) / 3; n <= 3 * p - 1; ++n) REQUIRE(ord_f_inversion(p, n, t) < 0);
    REQUIRE(ord_f_inversion(p, 3 * p - 1, t) == -(p - 1) / 2);
  }
}

TEST_CASE("closed form at p^2 - 1") {
  const auto& t = tables();
  CHECK(ord_f_psq_closed(3, t) == -1);
  CHECK(ord_f_psq_closed(5, t) == ord_f_inversion(5, 24, t));
  CHECK_THROWS_AS(ord_f_psq_closed(2, t), std::invalid_argument);
  CHECK_THROWS_AS(ord_f_psq_closed(9, t), std::invalid_argument);
  for (std::int64_t p = 3; p * p - 1 <= 20000; ++p) {
    if (!t.is_prime(p)) continue;
    REQUIRE(ord_f_psq_closed(p, t) == ord_f_inversion(p, p * p - 1, t));
    REQUIRE(ord_f_psq_closed(p, t) <= 0);
  }
}

TEST_CASE("log of the Farey product") {
  const auto& t = tables();
  CHECK(log_f(4, t) == doctest::Approx(std::log(48.0)).epsilon(1e-13));
  CHECK(log_f(1, t) == 0.0);
  CHECK(log_f(6, t) == doctest::Approx(std::log(9000.0)).epsilon(1e-13));
  for (std::int64_t n = 1; n <= 500; ++n) {
    const double a = log_f(n, t), b = oracle_log_f(n);
    REQUIRE(std::fabs(a - b) <= 1e-9 * std::max(1.0, b));
    REQUIRE(a >= 0.0);
  }
  const double r = log_f(10000, t) / static_cast<double>(t.phi_sum(10000)) - 1.0;
  CHECK(std::fabs(r) < 1e-3);
  CHECK(log_f_error_bound(10000, t) < 1e-3);
}

TEST_CASE("lowest terms") {
  const auto& t = tables();
  CHECK(lowest_terms_logs(58, t).log_Nhat == 0.0);
  const auto seven = lowest_terms_logs(7, t);
  CHECK(seven.log_Nhat == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // F(7) = 5^2 7^6 / 2 (by exact enumeration; no factor 3).
  CHECK(seven.log_Dhat == doctest::Approx(std::log(25.0 * 117649.0)).epsilon(1e-14));
  for (std::int64_t n = 1; n <= 500; ++n) {
    const auto lt = lowest_terms_logs(n, t);
    const double f = log_f(n, t);
    REQUIRE(lt.log_Nhat >= 0.0);
    REQUIRE(std::fabs(lt.log_Dhat - lt.log_Nhat - f) <= 1e-6 * std::max(1.0, f));
  }
}

TEST_CASE("integrality scan") {
  const auto& t = tables();
  const auto found = integer_farey_scan(200, t);
  for (std::int64_t n = 1; n <= 6; ++n) CHECK(std::find(found.begin(), found.end(), n) != found.end());
  CHECK(std::find(found.begin(), found.end(), 7) == found.end());
  REQUIRE_FALSE(found.empty());
  CHECK(found.back() == 58);
}

TEST_CASE("property scans") {
  const auto t = build_tables(59049);
  const auto r2 = property_scan(2, 32767, t);
  const std::int64_t table41[] = {0, 0, -1, -2, -19, -35, -113, -216, -733, -1529, -3830, -7352, -20348, -41750, -89956};
  REQUIRE(r2.at_power_minus_one.size() == 15);
  for (std::size_t i = 0; i < 15; ++i) CHECK(r2.at_power_minus_one[i].value == table41[i]);
  CHECK(r2.p1_violations.empty());
  CHECK(r2.p2_violations.empty());
  CHECK(r2.positive + r2.negative + r2.zero == 32767);

  const auto r3 = property_scan(3, 6561, t);
  CHECK(r3.at_power_minus_one[7].value == -12380);

  const auto small = property_scan(2, 1023, t);
  CHECK(small.p1_violations.empty());
  CHECK(small.p2_violations.empty());
}

TEST_CASE("power tables") {
  const auto t = build_tables(59048);
  const auto rows = power_table(3, 10, t);
  const std::int64_t tableA1[] = {0, -1, -9, -50, -248, -860, -3333, -12380, -45773, -148338};
  for (std::size_t i = 0; i < 10; ++i) CHECK(rows[i].ord == tableA1[i]);
  CHECK(rows[4].ord_over_N == doctest::Approx(248.0 / 242.0));
  CHECK(rows[0].ord_over_N == 0.0);
  CHECK(rows[0].ord_over_NlogN == 0.0);
}

TEST_CASE("series and methods") {
  const auto& t = tables();
  const auto inv = ord_f_series(3, 1, 400, t, Method::inversion);
  const auto dir = ord_f_series(3, 1, 400, t, Method::direct);
  const auto ora = ord_f_series(3, 1, 400, t, Method::oracle);
  CHECK(inv.values == dir.values);
  CHECK(inv.values == ora.values);
  const auto mid = ord_f_series(3, 100, 200, t, Method::oracle);
  CHECK(mid.at(150) == inv.at(150));
  CHECK(parse_method("direct") == Method::direct);
  CHECK_THROWS(parse_method("fast"));

  const auto lg = log_series(LogSeries::Kind::logG, 1, 1000, t);
  for (std::size_t i = 1; i < lg.values.size(); ++i) REQUIRE(lg.values[i] >= lg.values[i - 1]);
  const auto lf = log_series(LogSeries::Kind::logF, 1, 1000, t);
  for (std::size_t i = 0; i < lf.values.size(); ++i) {
    REQUIRE(lf.values[i] >= 0.0);
    REQUIRE(lf.error_bounds[i] >= 0.0);
  }
}
