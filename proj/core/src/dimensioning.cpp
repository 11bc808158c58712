#include "hapecon/dimensioning.hpp"

#include <algorithm>

#include "hapecon/error.hpp"

namespace hapecon {

std::string_view to_string(BindingConstraint c) {
  switch (c) {
    case BindingConstraint::none: return "none";
    case BindingConstraint::coverage: return "coverage";
    case BindingConstraint::fronthaul: return "fronthaul";
    case BindingConstraint::gateway: return "gateway";
  }
  return "none";
}

std::int64_t subscribers(Area area, Decimal penetration) {
  if (area.hundredths() <= 0) throw Error(ErrorCode::validation, "area must be positive");
  if (penetration.raw() < 0) throw Error(ErrorCode::validation, "penetration must be >= 0");
  const int128 product = static_cast<int128>(area.hundredths()) * penetration.raw();
  return static_cast<std::int64_t>(div_half_up(product, static_cast<int128>(100) * Decimal::scale));
}

DataRate backhaul_demand(std::int64_t sites, DataRate uplink, DataRate downlink) {
  if (sites < 1) throw Error(ErrorCode::validation, "site count must be >= 1");
  return (uplink + downlink).times(sites);
}

SpectrumPlan satellite_spectrum(DataRate demand, Decimal efficiency, Bandwidth transponder_bandwidth) {
  if (efficiency.raw() <= 0) throw Error(ErrorCode::validation, "spectral efficiency must be > 0");
  if (transponder_bandwidth.khz() <= 0) throw Error(ErrorCode::validation, "transponder bandwidth must be > 0");
  // kb/s over b/s/Hz gives kHz; keep 100 kHz resolution.
  const int128 num = static_cast<int128>(demand.kbps()) * Decimal::scale;
  const int128 den = static_cast<int128>(efficiency.raw()) * 100;
  const auto tenths_mhz = static_cast<std::int64_t>(div_half_up(num, den));
  SpectrumPlan plan;
  plan.required_bandwidth = Bandwidth::from_khz(tenths_mhz * 100);
  plan.transponder_bandwidth = transponder_bandwidth;
  plan.transponder_count = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(div_ceil(plan.required_bandwidth.khz(), transponder_bandwidth.khz())));
  return plan;
}

std::int64_t available_cells(std::int64_t layout_cells, Decimal redundancy_fraction) {
  if (redundancy_fraction.raw() < 0 || redundancy_fraction.raw() >= Decimal::scale) {
    throw Error(ErrorCode::validation, "redundancy fraction must be in [0, 1)");
  }
  const int128 kept = static_cast<int128>(layout_cells) * (Decimal::scale - redundancy_fraction.raw());
  return static_cast<std::int64_t>(div_half_up(kept, Decimal::scale));
}

DataRate clear_air_fronthaul(std::int64_t cells, DataRate per_cell) {
  if (cells < 0) throw Error(ErrorCode::validation, "cell count must be >= 0");
  return per_cell.times(cells);
}

DataRate clear_air_fronthaul(const PlatformSpec& platform) {
  return clear_air_fronthaul(available_cells(platform.layout_cells, platform.redundancy_fraction),
                             platform.per_cell_clear_air);
}

DataRate derated_fronthaul(const PlatformSpec& platform, std::optional<Availability> availability) {
  if (!availability) return clear_air_fronthaul(platform);
  const auto it = platform.derating_table.lower_bound(*availability);
  if (it == platform.derating_table.end()) {
    throw Error(ErrorCode::out_of_range, "availability " + availability->to_string_exact() +
                                             " exceeds the highest derating anchor of platform '" +
                                             platform.id + "'");
  }
  return it->second;
}

Fixed<2> throughput_density(DataRate fronthaul, Area area, Decimal contention) {
  if (area.hundredths() <= 0) throw Error(ErrorCode::validation, "area must be positive");
  if (contention < Decimal::from_int(1)) throw Error(ErrorCode::validation, "contention must be >= 1");
  // kbps / (hundredths * contention_raw) scaled to hundredths of Mb/s per km².
  const int128 num = static_cast<int128>(fronthaul.kbps()) * 100 * 100 * Decimal::scale;
  const int128 den = static_cast<int128>(area.hundredths()) * contention.raw() * 1000;
  return Fixed<2>::from_raw(static_cast<std::int64_t>(div_half_up(num, den)));
}

FeasibilityReport fleet_feasibility(const ScenarioParams& scenario, const PlatformSpec& platform,
                                    Availability availability, std::optional<std::int64_t> fleet_size,
                                    bool require_gateway) {
  if (platform.covered_area.hundredths() <= 0) {
    throw Error(ErrorCode::validation, "platform '" + platform.id + "' covered area must be positive");
  }
  if (require_gateway && !platform.gateway_capacity) {
    throw Error(ErrorCode::missing_parameter, "gateway capacity of platform '" + platform.id + "'");
  }
  const DataRate demand =
      backhaul_demand(scenario.site_count, scenario.per_site_uplink, scenario.per_site_downlink);
  const DataRate capacity = derated_fronthaul(platform, availability);

  const auto for_coverage = static_cast<std::int64_t>(
      div_ceil(scenario.service_area.hundredths(), platform.covered_area.hundredths()));
  std::int64_t for_fronthaul = 1;
  if (demand.kbps() > 0) {
    if (capacity.kbps() <= 0) {
      throw Error(ErrorCode::out_of_range, "platform '" + platform.id + "' has no capacity at availability " +
                                               availability.to_string_exact());
    }
    for_fronthaul = static_cast<std::int64_t>(div_ceil(demand.kbps(), capacity.kbps()));
  }

  FeasibilityReport report;
  report.platforms_required = std::max<std::int64_t>({1, for_coverage, for_fronthaul});
  report.fleet_size = fleet_size.value_or(1);
  if (report.fleet_size < 1) throw Error(ErrorCode::validation, "fleet size must be >= 1");
  report.fronthaul_capacity = capacity;

  const std::int64_t n = report.fleet_size;
  const DataRate share = DataRate::from_kbps(static_cast<std::int64_t>(div_ceil(demand.kbps(), n)));
  report.coverage_ok = scenario.service_area.hundredths() <= static_cast<int128>(n) * platform.covered_area.hundredths();
  report.fronthaul_ok = capacity >= share;
  if (platform.gateway_capacity) report.gateway_ok = *platform.gateway_capacity >= share;

  if (!report.coverage_ok) {
    report.binding_constraint = BindingConstraint::coverage;
  } else if (!report.fronthaul_ok) {
    report.binding_constraint = BindingConstraint::fronthaul;
  } else if (report.gateway_ok == false) {
    report.binding_constraint = BindingConstraint::gateway;
  }
  return report;
}

std::int64_t sellable_links(std::int64_t cells, DataRate cell_rate, Decimal contention, DataRate link_rate) {
  if (link_rate.kbps() <= 0) throw Error(ErrorCode::validation, "link rate must be > 0");
  if (contention < Decimal::from_int(1)) throw Error(ErrorCode::validation, "contention must be >= 1");
  const int128 offered = static_cast<int128>(cells) * cell_rate.kbps() * contention.raw();
  return static_cast<std::int64_t>(offered / (static_cast<int128>(link_rate.kbps()) * Decimal::scale));
}

}  // namespace hapecon
