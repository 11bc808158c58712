#pragma once

#include <cstdint>
#include <optional>

#include "hapecon/domain.hpp"

namespace hapecon {

struct SpectrumPlan {
  Bandwidth required_bandwidth;  // rounded to 0.1 MHz
  std::int64_t transponder_count = 0;
  Bandwidth transponder_bandwidth;
};

enum class BindingConstraint { none, coverage, fronthaul, gateway };
std::string_view to_string(BindingConstraint c);

struct FeasibilityReport {
  bool coverage_ok = false;
  bool fronthaul_ok = false;
  /// Empty when the platform has no stated gateway capacity.
  std::optional<bool> gateway_ok;
  std::int64_t platforms_required = 1;
  /// Fleet size the flags were evaluated for.
  std::int64_t fleet_size = 1;
  BindingConstraint binding_constraint = BindingConstraint::none;
  /// Per-platform fronthaul capacity at the requested availability.
  DataRate fronthaul_capacity;

  bool feasible() const { return coverage_ok && fronthaul_ok && gateway_ok.value_or(true); }
};

/// round-half-up(area x penetration).
std::int64_t subscribers(Area area, Decimal penetration);

DataRate backhaul_demand(std::int64_t sites, DataRate uplink, DataRate downlink);

/// Bandwidth = demand / efficiency, rounded half-up to 0.1 MHz, and the
/// number of whole transponders needed to carry it.
SpectrumPlan satellite_spectrum(DataRate demand, Decimal efficiency, Bandwidth transponder_bandwidth);

/// round-half-up(layout_cells x (1 - redundancy)).
std::int64_t available_cells(std::int64_t layout_cells, Decimal redundancy_fraction);

DataRate clear_air_fronthaul(std::int64_t cells, DataRate per_cell);

DataRate clear_air_fronthaul(const PlatformSpec& platform);

/// Capacity guaranteed at `availability`, or clear-air capacity when empty.
/// Between anchors the next higher anchor's capacity applies; below the
/// lowest anchor that anchor applies. Throws OUT_OF_RANGE above the highest.
DataRate derated_fronthaul(const PlatformSpec& platform, std::optional<Availability> availability);

/// Mb/s per km² with 2 fractional digits: fronthaul / (area x contention).
Fixed<2> throughput_density(DataRate fronthaul, Area area, Decimal contention);

/// Evaluates coverage, fronthaul and gateway constraints for a fleet of
/// `fleet_size` platforms (a single platform when empty) and reports the
/// minimum fleet meeting coverage and fronthaul. Demand is split evenly
/// between platforms.
FeasibilityReport fleet_feasibility(const ScenarioParams& scenario, const PlatformSpec& platform,
                                    Availability availability,
                                    std::optional<std::int64_t> fleet_size = std::nullopt,
                                    bool require_gateway = false);

/// floor(cells x cell_rate x contention / link_rate).
std::int64_t sellable_links(std::int64_t cells, DataRate cell_rate, Decimal contention, DataRate link_rate);

}  // namespace hapecon
