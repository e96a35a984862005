#include "farey/radix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace farey {
namespace {

void check_args(std::int64_t base, std::int64_t n) {
  if (base < 2) throw std::invalid_argument("radix base must be at least 2, got " + std::to_string(base));
  if (n < 0) throw std::invalid_argument("digit statistics need n >= 0");
  if (n > kMaxDigitArgument) throw std::out_of_range("digit statistics argument above 1e15");
}

}  // namespace

std::int64_t digit_sum(std::int64_t base, std::int64_t n) {
  check_args(base, n);
  std::int64_t s = 0;
  for (; n != 0; n /= base) s += n % base;
  return s;
}

std::int64_t digit_summatory(std::int64_t base, std::int64_t n) {
  check_args(base, n);
  __extension__ typedef __int128 i128;
  const i128 b = base;
  const i128 digit_total = b * (b - 1) / 2;  // 0 + 1 + ... + (b-1)
  i128 total = 0;
  for (i128 place = 1; place <= n; place *= b) {
    const i128 cycle = place * b;
    const i128 full = n / cycle;
    const i128 rest = n % cycle;
    const i128 top = rest / place;  // digits 0..top-1 completed in the partial cycle
    total += full * place * digit_total;
    total += place * (top * (top - 1) / 2) + (rest % place) * top;
  }
  if (total > INT64_MAX) throw std::overflow_error("digit summatory exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

double delange_f_empirical(std::int64_t base, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("delange_f_empirical needs n >= 1");
  const double s = static_cast<double>(digit_summatory(base, n));
  const double x = static_cast<double>(n);
  const double log_b = std::log(x) / std::log(static_cast<double>(base));
  return s / x - 0.5 * static_cast<double>(base - 1) * log_b;
}

double delange_c0(std::int64_t base) {
  if (base < 2) throw std::invalid_argument("radix base must be at least 2");
  const double b = static_cast<double>(base);
  return (b - 1.0) / (2.0 * std::log(b)) * (std::log(2.0 * std::numbers::pi) - 1.0) - (b + 1.0) / 4.0;
}

}  // namespace farey
