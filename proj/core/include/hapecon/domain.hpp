#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hapecon/fixed.hpp"
#include "hapecon/reliability.hpp"
#include "hapecon/units.hpp"

namespace hapecon {

struct ScenarioParams {
  Area service_area = Area::from_km2(1800);
  Decimal penetration = Decimal::from_int(10);  // subscribers per km²
  std::int64_t site_count = 108;
  DataRate per_site_uplink = DataRate::from_mbps(2);
  DataRate per_site_downlink = DataRate::from_mbps(5);
  Money arpu_monthly = Money::from_cents(350);
  std::int64_t amortization_months = 60;
  std::optional<DataRate> declared_total_demand;

  bool operator==(const ScenarioParams&) const = default;
};

enum class PlatformKind { unmanned_solar_plane, unmanned_airship };

/// One HAP class: cell layout, capacity, availability derating and costs.
struct PlatformSpec {
  std::string id;
  PlatformKind kind = PlatformKind::unmanned_solar_plane;
  std::int64_t layout_cells = 0;
  Decimal redundancy_fraction;
  Area covered_area;
  DataRate per_cell_clear_air = DataRate::from_mbps(120);
  /// Total fronthaul capacity guaranteed at each availability anchor.
  std::map<Availability, DataRate> derating_table;
  std::optional<DataRate> gateway_capacity;
  Money development_cost;
  Money capex_per_unit;
  Money opex_per_unit_year;

  bool operator==(const PlatformSpec&) const = default;
};

enum class CostPhase { capex, opex_annual };
enum class SiteClass { cell_site, aggregation_site, platform, backbone_fee, space_segment_lease };

struct CostItem {
  std::string label;
  CostPhase phase = CostPhase::capex;
  Money unit_cost;
  std::int64_t quantity = 0;
  SiteClass site_class = SiteClass::cell_site;

  Money extended() const { return unit_cost.times(quantity); }
  bool operator==(const CostItem&) const = default;
};

enum class OfferTier { aerial_only, aerial_with_failover, complete_high_availability };

struct WholesaleOffer {
  std::string id;
  DataRate link_rate = DataRate::from_mbps(10);
  OfferTier tier = OfferTier::aerial_only;
  Money monthly_price;

  bool operator==(const WholesaleOffer&) const = default;
};

/// Link counts per offer id for one forecast year.
using YearDemand = std::map<std::string, std::int64_t>;
/// Index = year (0-based, contiguous).
using DemandSchedule = std::vector<YearDemand>;

struct SatelliteArch {
  Decimal spectral_efficiency = Decimal::from_raw(1'963'600'000);  // b/s/Hz
  Bandwidth transponder_bandwidth = Bandwidth::from_mhz(72);
  Availability link_availability = Availability::from_raw(999'600'000);
  std::vector<CostItem> cost_catalog;
  Money annual_lease_per_mhz;

  bool operator==(const SatelliteArch&) const = default;
};

struct HapDirectArch {
  PlatformSpec platform;
  Availability fronthaul_availability;
  Money ground_capex;
  Money ground_opex_annual;
  bool include_development_cost = false;
  /// Forces the fleet size instead of using the minimum feasible count.
  std::optional<std::int64_t> fleet_size;
  /// Learning rate applied to successive platform units (1 = no learning).
  Decimal learning_rate = Decimal::from_int(1);
  /// Treat an absent gateway capacity as an error rather than "unknown".
  bool require_gateway = false;

  bool operator==(const HapDirectArch&) const = default;
};

struct IntegratedArch {
  PlatformSpec platform;
  std::vector<WholesaleOffer> offers;
  DemandSchedule demand;
  Decimal contention_ratio = Decimal::from_int(4);
  DataRate cell_rate_at_class = DataRate::from_mbps(80);
  Money mno_ground_capex = Money::from_keur(700);
  /// Offer the MNO buys for each of its sites; defaults to the first aerial_only offer.
  std::string mno_offer;
  std::int64_t fleet_size = 1;
  bool include_development_cost = false;
  /// Component availabilities (labels aerial, mno_backhaul, operator_backhaul).
  std::map<std::string, Availability> components;
  /// Per-tier topology overrides; leaves reference component labels.
  std::map<OfferTier, PathModel> tier_topologies;

  bool operator==(const IntegratedArch&) const = default;
};

using ArchitectureConfig = std::variant<SatelliteArch, HapDirectArch, IntegratedArch>;

struct NamedArchitecture {
  std::string id;
  std::string label;
  ArchitectureConfig config;

  bool operator==(const NamedArchitecture&) const = default;
};

struct AssessmentSettings {
  std::int64_t horizon_years = 10;
  double discount_rate = 0.0;

  bool operator==(const AssessmentSettings&) const = default;
};

/// A fully resolved, validated scenario.
struct Scenario {
  ScenarioParams params;
  std::vector<PlatformSpec> platforms;
  std::vector<NamedArchitecture> architectures;
  std::map<std::string, PathModel> paths;
  AssessmentSettings settings;

  const NamedArchitecture& architecture(const std::string& id) const;
  bool operator==(const Scenario&) const = default;
};

std::string_view to_string(PlatformKind kind);
std::string_view to_string(CostPhase phase);
std::string_view to_string(SiteClass site_class);
std::string_view to_string(OfferTier tier);
std::string_view architecture_kind(const ArchitectureConfig& config);

}  // namespace hapecon
