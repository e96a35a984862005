#include "farey/log_binomial.hpp"

#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace farey {
namespace {

struct Table {
  std::vector<long double> log_fact;      // ln k!
  std::vector<long double> log_fact_sum;  // sum_{j<=k} ln j!
  long double carry_fact = 0.0L;          // Kahan compensation terms at the end
  long double carry_sum = 0.0L;
};

std::mutex grow_mutex;
std::shared_ptr<const Table> current = [] {
  auto t = std::make_shared<Table>();
  t->log_fact = {0.0L};
  t->log_fact_sum = {0.0L};
  return std::shared_ptr<const Table>(std::move(t));
}();

std::shared_ptr<const Table> snapshot() { return std::atomic_load(&current); }

std::shared_ptr<const Table> grow_to(std::int64_t n) {
  std::lock_guard lock(grow_mutex);
  auto old = std::atomic_load(&current);
  if (static_cast<std::int64_t>(old->log_fact.size()) > n) return old;

  auto t = std::make_shared<Table>(*old);
  std::int64_t size = static_cast<std::int64_t>(t->log_fact.size());
  const std::int64_t target = std::max<std::int64_t>(n + 1, size * 3 / 2);
  t->log_fact.reserve(static_cast<std::size_t>(target));
  t->log_fact_sum.reserve(static_cast<std::size_t>(target));
  long double f = t->log_fact.back(), cf = t->carry_fact;
  long double s = t->log_fact_sum.back(), cs = t->carry_sum;
  for (std::int64_t k = size; k < target; ++k) {
    long double y = std::log(static_cast<long double>(k)) - cf;
    long double next = f + y;
    cf = (next - f) - y;
    f = next;
    y = f - cs;
    next = s + y;
    cs = (next - s) - y;
    s = next;
    t->log_fact.push_back(f);
    t->log_fact_sum.push_back(s);
  }
  t->carry_fact = cf;
  t->carry_sum = cs;
  std::shared_ptr<const Table> frozen = std::move(t);
  std::atomic_store(&current, frozen);
  return frozen;
}

}  // namespace

void reserve_log_factorials(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("reserve_log_factorials needs n >= 0");
  if (static_cast<std::int64_t>(snapshot()->log_fact.size()) <= n) grow_to(n);
}

long double log_g_exact_ld(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("log_g_exact needs n >= 1");
  auto t = snapshot();
  if (static_cast<std::int64_t>(t->log_fact.size()) <= n) t = grow_to(n);
  const auto i = static_cast<std::size_t>(n);
  return static_cast<long double>(n + 1) * t->log_fact[i] - 2.0L * t->log_fact_sum[i];
}

double log_g_exact(std::int64_t n) { return static_cast<double>(log_g_exact_ld(n)); }

double log_g_asymptotic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("log_g_asymptotic needs n >= 1");
  const long double x = static_cast<long double>(n);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double g0 = -0.5L * std::log(two_pi) - 1.0L / 12.0L + 2.0L * std::log(kGlaisherKinkelin);
  const long double lx = std::log(x);
  const long double v = x * x / 2.0L - x / 2.0L * lx + (1.0L - 0.5L * std::log(two_pi)) * x - lx / 3.0L + g0;
  return static_cast<double>(v);
}

}  // namespace farey
