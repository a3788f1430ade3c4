// Decimal string conversion for multiword values.
//
// Parsing is exact up to the final rounding: the string becomes a rational
// and is then rounded greedily to K words. Printing goes through the exact
// rational value of the components, so it never double-rounds.

#ifndef MW_CONVERT_HPP
#define MW_CONVERT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "mw/multiword.hpp"
#include "mw/oracle.hpp"

namespace mw {

/// Accepts [+-]digits[.digits][(e|E)[+-]digits] with at least one digit.
/// Throws std::invalid_argument on malformed input.
template <int K>
MultiWord<K> from_decimal_string(std::string_view text) {
  return from_oracle<K>(Rational::from_decimal(text));
}

/// Scientific notation, e.g. "1.4142...e+00". Non-finite leading components
/// print as "nan", "inf" or "-inf".
template <int K>
std::string to_decimal_string(const MultiWord<K>& x, int digits = default_decimal_digits<K>) {
  for (int i = 0; i < K; ++i) {
    if (std::isnan(x[i])) return "nan";
    if (std::isinf(x[i])) return x[i] < 0 ? "-inf" : "inf";
  }
  return to_oracle(x).to_decimal(digits);
}

/// Exact decimal value of x, trailing zeros trimmed. A sum of doubles is a
/// dyadic rational, so the expansion terminates; used for lossless files.
template <int K>
std::string to_exact_decimal_string(const MultiWord<K>& x) {
  for (int i = 0; i < K; ++i)
    if (!std::isfinite(x[i])) return to_decimal_string(x);
  const Rational v = to_oracle(x);
  if (v.is_zero()) return "0";
  int lo = std::numeric_limits<int>::max();
  for (int i = 0; i < K; ++i)
    if (x[i] != 0.0) lo = std::min(lo, std::max(std::ilogb(x[i]) - 52, -1074));
  const long hi = v.floor_log2();
  // 2^lo has at most hi - lo + 1 significant decimal digits beyond 2^hi.
  std::string s = v.to_decimal(static_cast<int>(hi - lo + 2));
  const auto e = s.find('e');
  std::string mant = s.substr(0, e);
  if (mant.find('.') != std::string::npos) {
    while (mant.back() == '0') mant.pop_back();
    if (mant.back() == '.') mant.pop_back();
  }
  return mant + s.substr(e);
}

}  // namespace mw

#endif  // MW_CONVERT_HPP
