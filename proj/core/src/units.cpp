#include "hapecon/units.hpp"

#include <limits>

#include "hapecon/error.hpp"

namespace hapecon {

namespace {

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  std::string s;
  const bool negative = v < 0;
  if (negative) v = -v;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) s.insert(s.begin(), '-');
  return s;
}

}  // namespace

std::string format_scaled(int128 raw, int raw_digits, int shown_digits) {
  int128 value = raw;
  if (shown_digits < raw_digits) {
    value = div_half_up(raw, pow10(raw_digits - shown_digits));
  } else if (shown_digits > raw_digits) {
    value = raw * pow10(shown_digits - raw_digits);
  }
  const bool negative = value < 0;
  if (negative) value = -value;
  const int128 scale = pow10(shown_digits);
  std::string out = int128_to_string(value / scale);
  if (shown_digits > 0) {
    std::string frac = int128_to_string(value % scale);
    out += '.';
    out += std::string(static_cast<std::size_t>(shown_digits) - frac.size(), '0');
    out += frac;
  }
  return negative ? "-" + out : out;
}

bool parse_scaled(std::string_view text, int digits, std::int64_t& out) {
  if (text.empty()) return false;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  int128 value = 0;
  for (char c : whole) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<std::int64_t>::max()) return false;
  }
  for (int i = 0; i < digits; ++i) {
    const int d = i < static_cast<int>(frac.size()) ? frac[static_cast<std::size_t>(i)] - '0' : 0;
    if (d < 0 || d > 9) return false;
    value = value * 10 + d;
  }
  if (static_cast<int>(frac.size()) > digits) {
    for (std::size_t i = static_cast<std::size_t>(digits); i < frac.size(); ++i) {
      if (frac[i] < '0' || frac[i] > '9') return false;
    }
    if (frac[static_cast<std::size_t>(digits)] >= '5') value += 1;
  }
  if (value > std::numeric_limits<std::int64_t>::max()) return false;
  out = static_cast<std::int64_t>(negative ? -value : value);
  return true;
}

int unit_digits(MoneyUnit unit) {
  switch (unit) {
    case MoneyUnit::eur: return 2;
    case MoneyUnit::keur: return 5;
    case MoneyUnit::meur: return 8;
  }
  return 2;
}

std::string_view unit_suffix(MoneyUnit unit) {
  switch (unit) {
    case MoneyUnit::eur: return "EUR";
    case MoneyUnit::keur: return "kEUR";
    case MoneyUnit::meur: return "MEUR";
  }
  return "EUR";
}

Money Money::parse(std::string_view text, MoneyUnit unit) {
  const int digits = unit_digits(unit);
  std::int64_t fine = 0;
  // Parse with two spare digits to detect sub-cent input.
  if (!parse_scaled(text, digits + 2, fine)) {
    throw Error(ErrorCode::validation, "malformed money literal '" + std::string(text) + "'");
  }
  if (fine % 100 != 0) {
    throw Error(ErrorCode::validation, "money literal '" + std::string(text) + "' is finer than one cent");
  }
  return from_cents(fine / 100);
}

Money Money::times(std::int64_t quantity) const {
  const int128 v = static_cast<int128>(cents_) * quantity;
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::out_of_range, "money overflow");
  }
  return from_cents(static_cast<std::int64_t>(v));
}

Money Money::scaled(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "money scaled by x/0");
  return from_cents(static_cast<std::int64_t>(div_half_up(static_cast<int128>(cents_) * num, den)));
}

Money Money::divided_by(std::int64_t den) const {
  if (den <= 0) throw Error(ErrorCode::division_by_zero, "money divided by non-positive integer");
  return from_cents(static_cast<std::int64_t>(div_half_up(cents_, den)));
}

std::string Money::format(MoneyUnit unit, int digits) const {
  return format_scaled(cents_, unit_digits(unit), digits);
}

Availability Availability::from_raw(std::int64_t raw) {
  if (raw < 0 || raw >= one) {
    throw Error(ErrorCode::out_of_range,
                "availability " + format_scaled(raw, digits, digits) + " outside [0, 1)");
  }
  Availability a;
  a.raw_ = raw;
  return a;
}

Availability Availability::from_double(double fraction) {
  return from_raw(static_cast<std::int64_t>(std::llround(fraction * static_cast<double>(one))));
}

Availability Availability::parse(std::string_view text) {
  std::int64_t raw = 0;
  if (!parse_scaled(text, digits, raw)) {
    throw Error(ErrorCode::validation, "malformed availability '" + std::string(text) + "'");
  }
  return from_raw(raw);
}

std::string Availability::to_string_exact() const {
  int shown = digits;
  std::int64_t r = raw_;
  while (shown > 4 && r % 10 == 0) {
    r /= 10;
    --shown;
  }
  return format_scaled(raw_, digits, shown);
}

}  // namespace hapecon
