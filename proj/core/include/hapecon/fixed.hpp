#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hapecon {

__extension__ using int128 = __int128;

constexpr std::int64_t pow10(int digits) {
  std::int64_t r = 1;
  for (int i = 0; i < digits; ++i) r *= 10;
  return r;
}

/// num / den rounded half away from zero. den must be non-zero.
constexpr int128 div_half_up(int128 num, int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const bool negative = num < 0;
  const int128 mag = negative ? -num : num;
  const int128 base = mag / den;
  const int128 rem = mag % den;
  const int128 rounded = (2 * rem >= den) ? base + 1 : base;
  return negative ? -rounded : rounded;
}

/// Ceiling division for non-negative numerators, positive den.
constexpr int128 div_ceil(int128 num, int128 den) { return (num + den - 1) / den; }

/// Formats raw / 10^raw_digits with exactly shown_digits fractional digits,
/// rounding half away from zero when shown_digits < raw_digits.
std::string format_scaled(int128 raw, int raw_digits, int shown_digits);

/// Parses a plain decimal literal ("-12.345") into units of 10^-digits,
/// rounding half away from zero on excess digits. Returns false on malformed input.
bool parse_scaled(std::string_view text, int digits, std::int64_t& out);

/// Decimal with a fixed number of fractional digits stored as an integer.
template <int Digits>
class Fixed {
  static_assert(Digits >= 0 && Digits <= 12);

 public:
  static constexpr int digits = Digits;
  static constexpr std::int64_t scale = pow10(Digits);

  constexpr Fixed() = default;

  static constexpr Fixed from_raw(std::int64_t raw) {
    Fixed f;
    f.raw_ = raw;
    return f;
  }
  static constexpr Fixed from_int(std::int64_t v) { return from_raw(v * scale); }
  static Fixed from_double(double v) {
    return from_raw(static_cast<std::int64_t>(std::llround(v * static_cast<double>(scale))));
  }

  constexpr std::int64_t raw() const { return raw_; }
  double to_double() const { return static_cast<double>(raw_) / static_cast<double>(scale); }
  std::string to_string() const { return format_scaled(raw_, Digits, Digits); }
  std::string to_string(int shown) const { return format_scaled(raw_, Digits, shown); }

  template <int Other>
  constexpr Fixed<Other> rescale() const {
    if constexpr (Other >= Digits) {
      return Fixed<Other>::from_raw(raw_ * pow10(Other - Digits));
    } else {
      return Fixed<Other>::from_raw(
          static_cast<std::int64_t>(div_half_up(raw_, pow10(Digits - Other))));
    }
  }

  constexpr auto operator<=>(const Fixed&) const = default;

 private:
  std::int64_t raw_ = 0;
};

/// General-purpose exact decimal (penetration, ratios, efficiencies).
using Decimal = Fixed<9>;

}  // namespace hapecon
