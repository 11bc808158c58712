#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hapecon/fixed.hpp"

namespace hapecon {

enum class MoneyUnit { eur, keur, meur };

/// Exact amount in euro-cents. Display rounding is separate from arithmetic.
class Money {
 public:
  constexpr Money() = default;

  static constexpr Money from_cents(std::int64_t cents) {
    Money m;
    m.cents_ = cents;
    return m;
  }
  static constexpr Money from_eur(std::int64_t eur) { return from_cents(eur * 100); }
  static constexpr Money from_keur(std::int64_t keur) { return from_cents(keur * 100'000); }
  static constexpr Money from_meur(std::int64_t meur) { return from_cents(meur * 100'000'000); }

  /// Parses a decimal literal expressed in `unit`; throws VALIDATION on
  /// malformed input or sub-cent precision.
  static Money parse(std::string_view text, MoneyUnit unit);

  constexpr std::int64_t cents() const { return cents_; }
  bool is_negative() const { return cents_ < 0; }

  constexpr Money operator+(Money o) const { return from_cents(cents_ + o.cents_); }
  constexpr Money operator-(Money o) const { return from_cents(cents_ - o.cents_); }
  constexpr Money operator-() const { return from_cents(-cents_); }
  Money& operator+=(Money o) {
    cents_ += o.cents_;
    return *this;
  }
  Money& operator-=(Money o) {
    cents_ -= o.cents_;
    return *this;
  }

  /// Exact integer multiple.
  Money times(std::int64_t quantity) const;
  /// cents * num / den, rounded half-up.
  Money scaled(std::int64_t num, std::int64_t den) const;
  /// cents / den (den > 0), rounded half-up.
  Money divided_by(std::int64_t den) const;

  /// Amount in `unit` with `digits` fractional digits, no unit suffix.
  std::string format(MoneyUnit unit, int digits) const;
  std::string eur() const { return format(MoneyUnit::eur, 2); }

  constexpr auto operator<=>(const Money&) const = default;

 private:
  std::int64_t cents_ = 0;
};

int unit_digits(MoneyUnit unit);
std::string_view unit_suffix(MoneyUnit unit);

/// Non-negative data rate in kb/s.
class DataRate {
 public:
  constexpr DataRate() = default;
  static constexpr DataRate from_kbps(std::int64_t kbps) {
    DataRate r;
    r.kbps_ = kbps;
    return r;
  }
  static constexpr DataRate from_mbps(std::int64_t mbps) { return from_kbps(mbps * 1000); }

  constexpr std::int64_t kbps() const { return kbps_; }
  std::string mbps_string(int digits = 0) const { return format_scaled(kbps_, 3, digits); }

  constexpr DataRate operator+(DataRate o) const { return from_kbps(kbps_ + o.kbps_); }
  constexpr DataRate times(std::int64_t n) const { return from_kbps(kbps_ * n); }

  constexpr auto operator<=>(const DataRate&) const = default;

 private:
  std::int64_t kbps_ = 0;
};

/// Surface in hundredths of km².
class Area {
 public:
  constexpr Area() = default;
  static constexpr Area from_hundredths(std::int64_t h) {
    Area a;
    a.hundredths_ = h;
    return a;
  }
  static constexpr Area from_km2(std::int64_t km2) { return from_hundredths(km2 * 100); }

  constexpr std::int64_t hundredths() const { return hundredths_; }
  std::string km2_string(int digits = 2) const { return format_scaled(hundredths_, 2, digits); }

  constexpr auto operator<=>(const Area&) const = default;

 private:
  std::int64_t hundredths_ = 0;
};

/// Long-run up-time fraction in [0, 1), carried in units of 1e-9.
class Availability {
 public:
  static constexpr int digits = 9;
  static constexpr std::int64_t one = pow10(digits);

  constexpr Availability() = default;
  /// Throws OUT_OF_RANGE unless 0 <= raw < 1e9.
  static Availability from_raw(std::int64_t raw);
  static Availability from_double(double fraction);
  static Availability parse(std::string_view text);

  constexpr std::int64_t raw() const { return raw_; }
  constexpr std::int64_t unavailability_raw() const { return one - raw_; }
  double to_double() const { return static_cast<double>(raw_) / static_cast<double>(one); }
  std::string to_string(int shown = 4) const { return format_scaled(raw_, digits, shown); }
  /// Shortest representation that preserves the value (at least 4 digits).
  std::string to_string_exact() const;

  constexpr auto operator<=>(const Availability&) const = default;

 private:
  std::int64_t raw_ = 0;
};

/// Radio bandwidth in kHz.
class Bandwidth {
 public:
  constexpr Bandwidth() = default;
  static constexpr Bandwidth from_khz(std::int64_t khz) {
    Bandwidth b;
    b.khz_ = khz;
    return b;
  }
  static constexpr Bandwidth from_mhz(std::int64_t mhz) { return from_khz(mhz * 1000); }

  constexpr std::int64_t khz() const { return khz_; }
  std::string mhz_string(int digits = 1) const { return format_scaled(khz_, 3, digits); }

  constexpr auto operator<=>(const Bandwidth&) const = default;

 private:
  std::int64_t khz_ = 0;
};

}  // namespace hapecon
