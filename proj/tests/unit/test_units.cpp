#include <gtest/gtest.h>

#include "hapecon/error.hpp"
#include "hapecon/fixed.hpp"
#include "hapecon/units.hpp"

using namespace hapecon;

TEST(FixedPoint, HalfUpRoundsAwayFromZeroOnTies) {
  EXPECT_EQ(div_half_up(5, 10), 1);
  EXPECT_EQ(div_half_up(4, 10), 0);
  EXPECT_EQ(div_half_up(-5, 10), -1);
  EXPECT_EQ(div_half_up(-4, 10), 0);
  EXPECT_EQ(div_half_up(15, -10), -2);
  EXPECT_EQ(div_ceil(385007, 72000), 6);
}

TEST(FixedPoint, FormatScaled) {
  EXPECT_EQ(format_scaled(632'000'000, 8, 1), "6.3");
  EXPECT_EQ(format_scaled(1'134'000'000, 8, 1), "11.3");
  EXPECT_EQ(format_scaled(-5, 2, 1), "-0.1");
  EXPECT_EQ(format_scaled(7, 0, 2), "7.00");
  EXPECT_EQ(format_scaled(0, 3, 0), "0");
}

TEST(FixedPoint, ParseScaled) {
  std::int64_t v = 0;
  ASSERT_TRUE(parse_scaled("1.9636", 9, v));
  EXPECT_EQ(v, 1'963'600'000);
  ASSERT_TRUE(parse_scaled("-0.25", 2, v));
  EXPECT_EQ(v, -25);
  ASSERT_TRUE(parse_scaled("0.125", 2, v));
  EXPECT_EQ(v, 13);
  EXPECT_FALSE(parse_scaled("", 2, v));
  EXPECT_FALSE(parse_scaled("1e5", 2, v));
  EXPECT_FALSE(parse_scaled("1.2.3", 2, v));
}

TEST(FixedPoint, Rescale) {
  EXPECT_EQ(Fixed<3>::from_raw(1235).rescale<2>().raw(), 124);
  EXPECT_EQ(Fixed<1>::from_raw(12).rescale<3>().raw(), 1200);
}

TEST(Money, Display) {
  EXPECT_EQ(Money::from_cents(632'000'000).format(MoneyUnit::meur, 1), "6.3");
  EXPECT_EQ(Money::from_cents(367'200'000).format(MoneyUnit::meur, 1), "3.7");
  EXPECT_EQ(Money::from_keur(50).format(MoneyUnit::keur, 0), "50");
  EXPECT_EQ(Money::from_cents(944).eur(), "9.44");
  EXPECT_EQ(Money::from_cents(-250).eur(), "-2.50");
}

TEST(Money, Parse) {
  EXPECT_EQ(Money::parse("3.50", MoneyUnit::eur).cents(), 350);
  EXPECT_EQ(Money::parse("4.7", MoneyUnit::meur).cents(), 470'000'000);
  EXPECT_EQ(Money::parse("0.5", MoneyUnit::keur).cents(), 50'000);
  EXPECT_THROW(Money::parse("0.001", MoneyUnit::eur), Error);
  EXPECT_THROW(Money::parse("abc", MoneyUnit::eur), Error);
}

TEST(Money, Arithmetic) {
  const Money m = Money::from_keur(50);
  EXPECT_EQ(m.times(108).cents(), 540'000'000);
  EXPECT_EQ(Money::from_cents(10).divided_by(3).cents(), 3);
  EXPECT_EQ(Money::from_cents(5).divided_by(2).cents(), 3);
  EXPECT_EQ(Money::from_cents(100).scaled(3, 8).cents(), 38);
  EXPECT_THROW(m.divided_by(0), Error);
  EXPECT_THROW(Money::from_cents(INT64_MAX / 2).times(3), Error);
}

TEST(Availability, RangeAndText) {
  EXPECT_EQ(Availability::parse("0.9996").raw(), 999'600'000);
  EXPECT_EQ(Availability::parse("0.9996").to_string(), "0.9996");
  EXPECT_EQ(Availability::parse("0.989604").to_string_exact(), "0.989604");
  EXPECT_EQ(Availability::parse("0.99").to_string_exact(), "0.9900");
  EXPECT_EQ(Availability::from_raw(0).unavailability_raw(), Availability::one);
  try {
    Availability::parse("1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::out_of_range);
  }
  EXPECT_THROW(Availability::from_raw(-1), Error);
}

TEST(Units, RatesAreasBandwidths) {
  EXPECT_EQ(DataRate::from_mbps(2).times(108).mbps_string(), "216");
  EXPECT_EQ(DataRate::from_kbps(1500).mbps_string(1), "1.5");
  EXPECT_EQ(Area::from_km2(2734).km2_string(0), "2734");
  EXPECT_EQ(Bandwidth::from_khz(385'000).mhz_string(), "385.0");
}

TEST(Errors, CodeIsPrefixed) {
  const Error e(ErrorCode::capacity_exceeded, "year 3: too many links");
  EXPECT_STREQ(e.what(), "CAPACITY_EXCEEDED: year 3: too many links");
  EXPECT_EQ(e.detail(), "year 3: too many links");
  EXPECT_EQ(to_string(ErrorCode::no_root_in_range), "NO_ROOT_IN_RANGE");
}
