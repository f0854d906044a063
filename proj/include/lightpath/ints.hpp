// 128-bit exact integer helpers. All delays, arrival times and walk counts
// are kept in i128 so that systems up to n = 120 nodes stay exact; doubles
// never enter the time domain.
#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lightpath {

using i128 = __int128;

inline constexpr i128 kI128Max = static_cast<i128>((~static_cast<unsigned __int128>(0)) >> 1);

// 2^k for k in [0, 126].
constexpr i128 pow2(int k) {
  if (k < 0 || k > 126) throw std::out_of_range("pow2: exponent out of range");
  return i128{1} << k;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i128 addition overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 multiplication overflow");
  return r;
}

std::string to_string(i128 v);

// Parses an optionally signed decimal integer; rejects trailing garbage.
i128 parse_i128(std::string_view text);

// Exact conversion loses at most double rounding; fine for physical sizing.
double to_double(i128 v);

}  // namespace lightpath

// Global so that ordinary lookup (and test-framework stringification) finds it.
std::ostream& operator<<(std::ostream& os, __int128 v);
