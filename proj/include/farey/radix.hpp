#pragma once

// Base-b digit statistics: d_b(n), the digit summatory S_b(n) and the
// periodic function in Delange's formula S_b(n) = ((b-1)/2) n log_b n + f_b(log_b n) n.

#include <cstdint>

namespace farey {

// Inputs above this bound are rejected so that S_b(n) fits comfortably in 64 bits.
inline constexpr std::int64_t kMaxDigitArgument = 1'000'000'000'000'000;  // 1e15

// Sum of the base-b digits of n; d_b(0) = 0. Throws std::invalid_argument for
// b < 2 or n < 0.
std::int64_t digit_sum(std::int64_t base, std::int64_t n);

// S_b(n) = sum_{j=0}^{n-1} d_b(j), evaluated position by position in O(log_b n):
// each position with place value b^i runs through full cycles of length
// b^{i+1} (each contributing b^i (0 + 1 + ... + b-1)) and one partial cycle.
std::int64_t digit_summatory(std::int64_t base, std::int64_t n);

// f_b(log_b n) = S_b(n)/n - ((b-1)/2) log_b n, for n >= 1.
double delange_f_empirical(std::int64_t base, std::int64_t n);

// Constant Fourier coefficient c_b(0) = (b-1)/(2 ln b) (ln 2pi - 1) - (b+1)/4.
double delange_c0(std::int64_t base);

}  // namespace farey
