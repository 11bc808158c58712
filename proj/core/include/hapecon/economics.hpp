#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hapecon/domain.hpp"

namespace hapecon {

struct PhaseTotals {
  Money capex;
  Money opex_annual;
  bool operator==(const PhaseTotals&) const = default;
};

struct CostRollup {
  Money capex_total;
  Money opex_annual_total;
  std::map<SiteClass, PhaseTotals> by_site_class;
  bool operator==(const CostRollup&) const = default;
};

CostRollup rollup(std::span<const CostItem> items);

/// capex / months, half-up to the cent.
Money amortized_monthly(Money capex, std::int64_t months);

/// (capex / months + opex_annual / 12) / subscribers with a single
/// half-up rounding to the cent. Throws DIVISION_BY_ZERO for no subscribers.
Money per_subscriber_monthly(Money capex, Money opex_annual, std::int64_t months,
                             std::int64_t subscribers);

struct CashFlow {
  std::int64_t period = 0;
  Money amount;
};
using CashFlowSeries = std::vector<CashFlow>;

/// Unrounded present value in cents.
long double present_value_cents(const CashFlowSeries& flows, long double rate);

/// Sum of amount_t / (1 + rate)^t, half-up to the cent. rate must exceed -1.
Money npv(const CashFlowSeries& flows, double rate);

struct IrrResult {
  double rate = 0.0;
  /// Set when several roots exist in the search bracket; `rate` is the one
  /// closest to zero.
  bool multiple_roots = false;
};

inline constexpr double irr_lower_bound = -0.99;
inline constexpr double irr_upper_bound = 10.0;

/// Rate in (-0.99, 10) where the present value vanishes. Throws
/// NO_SIGN_CHANGE or NO_ROOT_IN_RANGE.
IrrResult irr(const CashFlowSeries& flows);

/// Wright's law: first_unit x n^log2(learning_rate), half-up to the cent.
Money learning_unit_cost(Money first_unit, std::int64_t n, double learning_rate);

/// Sum of the first `count` learning-curve unit costs.
Money fleet_acquisition_cost(Money first_unit, std::int64_t count, double learning_rate);

/// 12 x sum(count x monthly_price). Throws UNKNOWN_REFERENCE for an unpriced offer.
Money wholesale_income(const YearDemand& demand, std::span<const WholesaleOffer> offers);

std::int64_t total_links(const YearDemand& demand);

/// 100 x total links / sellable, 1 fractional digit. Throws
/// CAPACITY_EXCEEDED when demand exceeds the sellable count.
Fixed<1> utilization(const YearDemand& demand, std::int64_t sellable);

struct ForecastRow {
  std::int64_t year = 0;
  YearDemand links_by_offer;
  std::int64_t total_links = 0;
  Fixed<1> utilization_percent;
  Money income_annual;
};

/// One row per year in [0, years). CAPACITY_EXCEEDED names the failing year.
std::vector<ForecastRow> forecast(const DemandSchedule& demand, std::span<const WholesaleOffer> offers,
                                  std::int64_t sellable, std::int64_t years);

/// Expands sparse anchor years into a contiguous schedule [0, last anchor]
/// by linear interpolation, rounding counts half-up. Anchor 0 is required.
DemandSchedule interpolate_demand(const std::map<std::int64_t, YearDemand>& anchors);

}  // namespace hapecon
