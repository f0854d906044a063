#include "lightpath/ints.hpp"

#include <cctype>
#include <limits>

namespace lightpath {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Peel digits in unsigned space so i128 min does not overflow on negation.
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

i128 parse_i128(std::string_view text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  i128 value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    value = checked_add(checked_mul(value, 10), c - '0');
  }
  return neg ? -value : value;
}

double to_double(i128 v) {
  return static_cast<double>(v);
}

}  // namespace lightpath

std::ostream& operator<<(std::ostream& os, __int128 v) {
  return os << lightpath::to_string(v);
}
