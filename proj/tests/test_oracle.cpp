#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "farey/oracle.hpp"
#include "farey/sieve.hpp"

using namespace farey;

TEST_CASE("enumeration") {
  const std::vector<FareyFraction> four{{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}};
  CHECK(enumerate_farey(4) == four);
  CHECK(enumerate_farey(1) == std::vector<FareyFraction>{{1, 1}});
  CHECK_THROWS_AS(enumerate_farey(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_farey(kOracleCeiling + 1), std::out_of_range);

  const auto t = build_tables(500);
  for (std::int64_t n = 1; n <= 500; n += 7) {
    const auto f = enumerate_farey(n);
    REQUIRE(static_cast<std::int64_t>(f.size()) == t.phi_sum(n));
    for (std::size_t i = 0; i < f.size(); ++i) {
      REQUIRE(std::gcd(f[i].h, f[i].k) == 1);
      REQUIRE(f[i].h <= f[i].k);
      if (i) REQUIRE(f[i - 1].h * f[i].k < f[i].h * f[i - 1].k);
    }
  }
}

TEST_CASE("oracle valuations") {
  CHECK(oracle_ord(2, 96) == 5);
  CHECK(oracle_ord(3, 96) == 1);
  CHECK(oracle_ord_f(2, 4) == 4);
  CHECK(oracle_ord_f(7, 7) == 6);
  CHECK(oracle_ord_f(5, 5) == 4);
  CHECK(oracle_ord_f(2, 7) == -1);
  CHECK(oracle_ord_g(2, 4) == 5);
  CHECK_THROWS_AS(oracle_ord_f(6, 5), std::invalid_argument);
}

TEST_CASE("oracle logs") {
  CHECK(oracle_log_f(3) == doctest::Approx(std::log(9.0)).epsilon(1e-14));
  CHECK(oracle_log_f(1) == 0.0);
  CHECK(oracle_log_f(6) == doctest::Approx(std::log(9000.0)).epsilon(1e-13));
  CHECK(oracle_unreduced_log(5) == doctest::Approx(std::log(2500.0)).epsilon(1e-13));
  CHECK(oracle_unreduced_log(4) == doctest::Approx(std::log(96.0)).epsilon(1e-13));
}

TEST_CASE("grouping by gcd reproduces the unreduced multiset") {
  for (std::int64_t n = 1; n <= 100; ++n) REQUIRE(reduce_all_pairs(n) == farey_union_by_gcd(n));
}
