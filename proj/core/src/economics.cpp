#include "hapecon/economics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hapecon/error.hpp"

namespace hapecon {

CostRollup rollup(std::span<const CostItem> items) {
  CostRollup out;
  for (const auto& item : items) {
    if (item.quantity < 0) throw Error(ErrorCode::validation, "cost item '" + item.label + "' has negative quantity");
    if (item.unit_cost.is_negative()) {
      throw Error(ErrorCode::validation, "cost item '" + item.label + "' has negative unit cost");
    }
    const Money extended = item.extended();
    auto& cls = out.by_site_class[item.site_class];
    if (item.phase == CostPhase::capex) {
      cls.capex += extended;
      out.capex_total += extended;
    } else {
      cls.opex_annual += extended;
      out.opex_annual_total += extended;
    }
  }
  return out;
}

Money amortized_monthly(Money capex, std::int64_t months) {
  if (months < 1) throw Error(ErrorCode::validation, "amortization months must be >= 1");
  return capex.divided_by(months);
}

Money per_subscriber_monthly(Money capex, Money opex_annual, std::int64_t months,
                             std::int64_t subscribers) {
  if (months < 1) throw Error(ErrorCode::validation, "amortization months must be >= 1");
  if (subscribers < 1) throw Error(ErrorCode::division_by_zero, "per-subscriber cost needs at least one subscriber");
  // (capex/months + opex/12) / subs == (12 capex + months opex) / (12 months subs)
  const int128 num = static_cast<int128>(capex.cents()) * 12 + static_cast<int128>(opex_annual.cents()) * months;
  const int128 den = static_cast<int128>(12) * months * subscribers;
  return Money::from_cents(static_cast<std::int64_t>(div_half_up(num, den)));
}

long double present_value_cents(const CashFlowSeries& flows, long double rate) {
  long double sum = 0.0L;
  const long double v = 1.0L / (1.0L + rate);
  // Running discount factor; the common one-period step avoids pow.
  std::int64_t at = 0;
  long double factor = 1.0L;
  for (const auto& f : flows) {
    if (f.period == at + 1) {
      factor *= v;
    } else if (f.period != at) {
      factor = std::pow(v, static_cast<long double>(f.period));
    }
    at = f.period;
    sum += static_cast<long double>(f.amount.cents()) * factor;
  }
  return sum;
}

namespace {

void check_series(const CashFlowSeries& flows) {
  std::int64_t previous = -1;
  for (const auto& f : flows) {
    if (f.period <= previous) {
      throw Error(ErrorCode::validation, "cash-flow periods must be strictly increasing from 0");
    }
    previous = f.period;
  }
}

long double bisect(const CashFlowSeries& flows, long double lo, long double hi) {
  long double f_lo = present_value_cents(flows, lo);
  for (int i = 0; i < 400; ++i) {
    const long double mid = lo + (hi - lo) / 2;
    const long double f_mid = present_value_cents(flows, mid);
    // Runs well past the half cent that npv(irr) needs to round to 0.00.
    if (std::fabs(f_mid) < 1e-7L || hi - lo < 1e-15L) return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

Money npv(const CashFlowSeries& flows, double rate) {
  if (!(rate > -1.0)) throw Error(ErrorCode::validation, "discount rate must exceed -1");
  check_series(flows);
  return Money::from_cents(static_cast<std::int64_t>(std::llround(present_value_cents(flows, rate))));
}

IrrResult irr(const CashFlowSeries& flows) {
  check_series(flows);
  int sign_changes = 0;
  int last_sign = 0;
  for (const auto& f : flows) {
    const int s = f.amount.cents() > 0 ? 1 : (f.amount.cents() < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++sign_changes;
    last_sign = s;
  }
  if (sign_changes == 0) throw Error(ErrorCode::no_sign_change, "cash flows never change sign");

  // Scan sub-brackets evenly spaced in log(1 + r) and bisect each sign change.
  constexpr int steps = 2048;
  const long double log_lo = std::log(1.0L + irr_lower_bound);
  const long double log_hi = std::log(1.0L + irr_upper_bound);
  std::vector<long double> roots;
  long double prev_r = irr_lower_bound;
  long double prev_f = present_value_cents(flows, prev_r);
  for (int i = 1; i <= steps; ++i) {
    const long double r =
        i == steps ? static_cast<long double>(irr_upper_bound)
                   : std::exp(log_lo + (log_hi - log_lo) * i / steps) - 1.0L;
    const long double f = present_value_cents(flows, r);
    if (prev_f == 0.0L) {
      roots.push_back(prev_r);
    } else if ((prev_f < 0) != (f < 0) && f != 0.0L) {
      roots.push_back(bisect(flows, prev_r, r));
    }
    prev_r = r;
    prev_f = f;
  }
  if (roots.empty()) throw Error(ErrorCode::no_root_in_range, "no IRR in (-0.99, 10)");

  IrrResult result;
  result.multiple_roots = roots.size() > 1;
  const auto nearest = std::min_element(roots.begin(), roots.end(),
                                        [](long double a, long double b) { return std::fabs(a) < std::fabs(b); });
  result.rate = static_cast<double>(*nearest);
  return result;
}

Money learning_unit_cost(Money first_unit, std::int64_t n, double learning_rate) {
  if (n < 1) throw Error(ErrorCode::validation, "unit index must be >= 1");
  if (!(learning_rate > 0.0 && learning_rate <= 1.0)) {
    throw Error(ErrorCode::validation, "learning rate must be in (0, 1]");
  }
  const long double exponent = std::log2(static_cast<long double>(learning_rate));
  const long double factor = std::pow(static_cast<long double>(n), exponent);
  return Money::from_cents(std::llround(static_cast<long double>(first_unit.cents()) * factor));
}

Money fleet_acquisition_cost(Money first_unit, std::int64_t count, double learning_rate) {
  if (count < 1) throw Error(ErrorCode::validation, "fleet count must be >= 1");
  Money total;
  for (std::int64_t i = 1; i <= count; ++i) total += learning_unit_cost(first_unit, i, learning_rate);
  return total;
}

Money wholesale_income(const YearDemand& demand, std::span<const WholesaleOffer> offers) {
  Money monthly;
  for (const auto& [offer_id, count] : demand) {
    const auto it = std::find_if(offers.begin(), offers.end(),
                                 [&](const WholesaleOffer& o) { return o.id == offer_id; });
    if (it == offers.end()) throw Error(ErrorCode::unknown_reference, "offer '" + offer_id + "' has no price");
    monthly += it->monthly_price.times(count);
  }
  return monthly.times(12);
}

std::int64_t total_links(const YearDemand& demand) {
  std::int64_t total = 0;
  for (const auto& [id, count] : demand) total += count;
  return total;
}

Fixed<1> utilization(const YearDemand& demand, std::int64_t sellable) {
  if (sellable < 1) throw Error(ErrorCode::validation, "sellable link count must be >= 1");
  const std::int64_t total = total_links(demand);
  if (total > sellable) {
    throw Error(ErrorCode::capacity_exceeded, std::to_string(total) + " links demanded, " +
                                                  std::to_string(sellable) + " sellable");
  }
  return Fixed<1>::from_raw(static_cast<std::int64_t>(div_half_up(static_cast<int128>(total) * 1000, sellable)));
}

std::vector<ForecastRow> forecast(const DemandSchedule& demand, std::span<const WholesaleOffer> offers,
                                  std::int64_t sellable, std::int64_t years) {
  if (years < 1) throw Error(ErrorCode::validation, "forecast needs at least one year");
  if (static_cast<std::int64_t>(demand.size()) < years) {
    throw Error(ErrorCode::validation, "demand schedule covers " + std::to_string(demand.size()) +
                                           " years, " + std::to_string(years) + " requested");
  }
  std::vector<ForecastRow> rows;
  rows.reserve(static_cast<std::size_t>(years));
  for (std::int64_t y = 0; y < years; ++y) {
    const auto& year = demand[static_cast<std::size_t>(y)];
    ForecastRow row;
    row.year = y;
    row.links_by_offer = year;
    row.total_links = total_links(year);
    try {
      row.utilization_percent = utilization(year, sellable);
    } catch (const Error& e) {
      throw Error(e.code(), "year " + std::to_string(y) + ": " + e.detail());
    }
    row.income_annual = wholesale_income(year, offers);
    rows.push_back(std::move(row));
  }
  return rows;
}

DemandSchedule interpolate_demand(const std::map<std::int64_t, YearDemand>& anchors) {
  if (anchors.empty() || anchors.begin()->first != 0) {
    throw Error(ErrorCode::validation, "demand anchors must start at year 0");
  }
  std::set<std::string> offer_ids;
  for (const auto& [year, counts] : anchors) {
    for (const auto& [id, n] : counts) {
      if (n < 0) throw Error(ErrorCode::validation, "negative link count for offer '" + id + "'");
      offer_ids.insert(id);
    }
  }
  auto count_at = [](const YearDemand& d, const std::string& id) {
    const auto it = d.find(id);
    return it == d.end() ? std::int64_t{0} : it->second;
  };

  DemandSchedule out(static_cast<std::size_t>(anchors.rbegin()->first + 1));
  for (auto it = anchors.begin(); it != anchors.end(); ++it) {
    const auto next = std::next(it);
    if (next == anchors.end()) {
      for (const auto& id : offer_ids) out.back()[id] = count_at(it->second, id);
      break;
    }
    const std::int64_t span = next->first - it->first;
    for (std::int64_t k = 0; k < span; ++k) {
      auto& row = out[static_cast<std::size_t>(it->first + k)];
      for (const auto& id : offer_ids) {
        const std::int64_t a = count_at(it->second, id);
        const std::int64_t b = count_at(next->second, id);
        row[id] = a + static_cast<std::int64_t>(div_half_up(static_cast<int128>(b - a) * k, span));
      }
    }
  }
  return out;
}

}  // namespace hapecon
