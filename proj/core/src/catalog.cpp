#include "hapecon/catalog.hpp"

#include <algorithm>

#include "hapecon/economics.hpp"
#include "hapecon/error.hpp"

namespace hapecon::defaults {

namespace {

Availability avail(std::int64_t parts_per_10k) { return Availability::from_raw(parts_per_10k * 100'000); }

const PlatformSpec& find_platform(const std::vector<PlatformSpec>& platforms, const std::string& id) {
  const auto it = std::find_if(platforms.begin(), platforms.end(), [&](const auto& p) { return p.id == id; });
  if (it == platforms.end()) throw Error(ErrorCode::unknown_reference, "platform '" + id + "'");
  return *it;
}

}  // namespace

ScenarioParams scenario_params() { return ScenarioParams{}; }

std::vector<PlatformSpec> platforms() {
  PlatformSpec plane;
  plane.id = "solar_plane";
  plane.kind = PlatformKind::unmanned_solar_plane;
  plane.layout_cells = 19;
  plane.redundancy_fraction = Decimal::from_raw(50'000'000);
  plane.covered_area = Area::from_km2(2734);
  plane.per_cell_clear_air = DataRate::from_mbps(120);
  plane.derating_table = {{avail(9900), DataRate::from_mbps(2160)}, {avail(9990), DataRate::from_mbps(360)}};
  plane.gateway_capacity = DataRate::from_mbps(960);
  plane.development_cost = Money::from_meur(50);
  plane.capex_per_unit = Money::from_meur(4);
  plane.opex_per_unit_year = Money::from_meur(1);

  PlatformSpec airship;
  airship.id = "airship";
  airship.kind = PlatformKind::unmanned_airship;
  airship.layout_cells = 121;
  airship.redundancy_fraction = Decimal::from_raw(200'000'000);
  airship.covered_area = Area::from_km2(2827);
  airship.per_cell_clear_air = DataRate::from_mbps(120);
  airship.derating_table = {{avail(9900), DataRate::from_mbps(11640)}, {avail(9990), DataRate::from_mbps(1940)}};
  airship.development_cost = Money::from_meur(225);
  airship.capex_per_unit = Money::from_meur(30);
  airship.opex_per_unit_year = Money::from_meur(4);

  return {plane, airship};
}

std::vector<CostItem> satellite_cost_catalog(std::int64_t site_count) {
  return {
      {"cell site antenna (3.80 m)", CostPhase::capex, Money::from_keur(17), site_count, SiteClass::cell_site},
      {"cell site frequency transposition", CostPhase::capex, Money::from_keur(17), site_count, SiteClass::cell_site},
      {"cell site amplifier and modem", CostPhase::capex, Money::from_keur(16), site_count, SiteClass::cell_site},
      {"aggregation site antenna (11 m)", CostPhase::capex, Money::from_keur(430), 1, SiteClass::aggregation_site},
      {"aggregation site amplifiers, modems and transposition", CostPhase::capex, Money::from_keur(490), 1,
       SiteClass::aggregation_site},
      {"space segment lease and operations per cell site", CostPhase::opex_annual, Money::from_keur(105), site_count,
       SiteClass::space_segment_lease},
  };
}

std::vector<WholesaleOffer> wholesale_offers() {
  return {
      {"aerial", DataRate::from_mbps(10), OfferTier::aerial_only, Money::from_eur(250)},
      {"aerial_failover", DataRate::from_mbps(10), OfferTier::aerial_with_failover, Money::from_eur(1000)},
      {"complete_ha", DataRate::from_mbps(10), OfferTier::complete_high_availability, Money::from_eur(2000)},
  };
}

std::map<std::int64_t, YearDemand> wholesale_demand_anchors() {
  auto row = [](std::int64_t a, std::int64_t f, std::int64_t c) {
    return YearDemand{{"aerial", a}, {"aerial_failover", f}, {"complete_ha", c}};
  };
  return {{0, row(192, 86, 86)}, {3, row(164, 172, 86)}, {6, row(148, 260, 86)}, {9, row(230, 260, 86)}};
}

DemandSchedule wholesale_demand() { return interpolate_demand(wholesale_demand_anchors()); }

std::vector<NamedArchitecture> architectures(const ScenarioParams& params,
                                             const std::vector<PlatformSpec>& platforms) {
  SatelliteArch sat;
  sat.cost_catalog = satellite_cost_catalog(params.site_count);

  HapDirectArch hap_2a;
  hap_2a.platform = find_platform(platforms, "solar_plane");
  hap_2a.fronthaul_availability = avail(9900);
  hap_2a.ground_capex = Money::from_keur(700);
  hap_2a.ground_opex_annual = Money::from_keur(100);

  HapDirectArch hap_2b;
  hap_2b.platform = find_platform(platforms, "airship");
  hap_2b.fronthaul_availability = avail(9990);
  hap_2b.ground_capex = Money::from_keur(900);
  hap_2b.ground_opex_annual = Money::from_keur(100);

  HapDirectArch plane_999 = hap_2a;
  plane_999.fronthaul_availability = avail(9990);
  plane_999.fleet_size = 1;

  HapDirectArch plane_999_fleet = plane_999;
  plane_999_fleet.fleet_size.reset();

  IntegratedArch integrated;
  integrated.platform = find_platform(platforms, "solar_plane");
  integrated.offers = wholesale_offers();
  integrated.demand = wholesale_demand();
  integrated.mno_offer = "aerial";

  return {
      {"sat", "Satellite backhaul", sat},
      {"hap-2a", "HAP direct, solar plane @ 99%", hap_2a},
      {"hap-2b", "HAP direct, airship @ 99.9%", hap_2b},
      {"hap-plane-999", "HAP direct, single solar plane @ 99.9%", plane_999},
      {"hap-plane-999-fleet", "HAP direct, solar plane fleet @ 99.9%", plane_999_fleet},
      {"integrated", "Integrated terrestrial-aerial-satellite", integrated},
  };
}

Scenario scenario() {
  Scenario s;
  s.params = scenario_params();
  s.params.declared_total_demand = DataRate::from_mbps(756);
  s.platforms = platforms();
  s.architectures = architectures(s.params, s.platforms);
  return s;
}

}  // namespace hapecon::defaults
