#pragma once

#include <map>
#include <vector>

#include "hapecon/domain.hpp"

namespace hapecon::defaults {

/// 1800 km², 10 subscribers/km², 108 sites at 2/5 Mb/s, 3.50 € ARPU, 60 months.
ScenarioParams scenario_params();

/// Unmanned solar plane and unmanned airship. Clear-air capacity is quoted
/// at the 0.99 anchor; 0.999 anchors carry the derated capacities.
std::vector<PlatformSpec> platforms();

/// Satellite ground segment. Per-site items are multiplied by `site_count`.
std::vector<CostItem> satellite_cost_catalog(std::int64_t site_count);

/// 250 / 1000 / 2000 € per month, 10 Mb/s links.
std::vector<WholesaleOffer> wholesale_offers();

/// Link counts at years 0, 3, 6 and 9 of the wholesale forecast.
std::map<std::int64_t, YearDemand> wholesale_demand_anchors();

/// The anchors interpolated to a contiguous 10-year schedule.
DemandSchedule wholesale_demand();

std::vector<NamedArchitecture> architectures(const ScenarioParams& params,
                                             const std::vector<PlatformSpec>& platforms);

Scenario scenario();

}  // namespace hapecon::defaults
