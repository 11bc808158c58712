#include "hapecon/assess.hpp"

#include <algorithm>

#include "hapecon/error.hpp"
#include "hapecon/reliability.hpp"

namespace hapecon {

namespace {

CashFlowSeries cost_flows(Money capex, Money opex_annual, std::int64_t horizon_years) {
  CashFlowSeries flows;
  for (std::int64_t t = 0; t < horizon_years; ++t) {
    Money amount = -opex_annual;
    if (t == 0) amount -= capex;
    flows.push_back({t, amount});
  }
  return flows;
}

void finish_costs(AssessmentReport& report, const ScenarioParams& scenario) {
  report.costs = rollup(report.cost_items);
  report.per_subscriber_monthly = per_subscriber_monthly(report.costs.capex_total, report.costs.opex_annual_total,
                                                         scenario.amortization_months, report.subscribers);
  report.arpu_monthly = scenario.arpu_monthly;
  report.above_arpu = report.per_subscriber_monthly > scenario.arpu_monthly;
}

void finish_cash_flows(AssessmentReport& report, double discount_rate) {
  report.discount_rate = discount_rate;
  report.npv = npv(report.cash_flows, discount_rate);
  try {
    report.irr = irr(report.cash_flows);
    if (report.irr->multiple_roots) report.notes.emplace_back("MULTIPLE_ROOTS: IRR closest to zero reported");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::no_sign_change && e.code() != ErrorCode::no_root_in_range) throw;
    report.irr.reset();
  }
}

void assess_satellite(AssessmentReport& report, const ScenarioParams& scenario, const SatelliteArch& arch,
                      std::int64_t horizon_years) {
  report.spectrum = satellite_spectrum(report.backhaul_demand, arch.spectral_efficiency, arch.transponder_bandwidth);
  report.link = LinkAvailability{arch.link_availability, downtime_per_year(arch.link_availability)};

  report.cost_items = arch.cost_catalog;
  if (arch.annual_lease_per_mhz > Money{}) {
    const Bandwidth leased = report.spectrum->required_bandwidth;
    report.cost_items.push_back({"space segment lease (" + leased.mhz_string() + " MHz)", CostPhase::opex_annual,
                                 arch.annual_lease_per_mhz.scaled(leased.khz(), 1000), 1,
                                 SiteClass::space_segment_lease});
  }
  finish_costs(report, scenario);
  report.cash_flow_party = "mno";
  report.cash_flows = cost_flows(report.costs.capex_total, report.costs.opex_annual_total, horizon_years);
}

void assess_hap_direct(AssessmentReport& report, const ScenarioParams& scenario, const HapDirectArch& arch,
                       std::int64_t horizon_years) {
  const PlatformSpec& platform = arch.platform;
  const std::int64_t required =
      fleet_feasibility(scenario, platform, arch.fronthaul_availability, std::nullopt, arch.require_gateway)
          .platforms_required;
  const std::int64_t fleet = arch.fleet_size.value_or(required);
  report.feasibility =
      fleet_feasibility(scenario, platform, arch.fronthaul_availability, fleet, arch.require_gateway);
  report.feasible = report.feasibility->feasible();
  if (!report.feasibility->gateway_ok) {
    report.notes.emplace_back("gateway capacity of '" + platform.id + "' not stated; gateway check skipped");
  }
  if (!report.feasible) {
    report.notes.emplace_back("infeasible with " + std::to_string(fleet) + " platform(s): binding constraint " +
                              std::string(to_string(report.feasibility->binding_constraint)) + "; " +
                              std::to_string(required) + " required");
  }

  FronthaulCapacity fh;
  fh.available_cells = available_cells(platform.layout_cells, platform.redundancy_fraction);
  fh.clear_air = clear_air_fronthaul(fh.available_cells, platform.per_cell_clear_air);
  fh.availability = arch.fronthaul_availability;
  fh.derated = derated_fronthaul(platform, arch.fronthaul_availability);
  report.fronthaul = fh;

  const double learning = arch.learning_rate.to_double();
  if (arch.learning_rate == Decimal::from_int(1)) {
    report.cost_items.push_back({"HAP units (" + platform.id + ")", CostPhase::capex, platform.capex_per_unit, fleet,
                                 SiteClass::platform});
  } else {
    report.cost_items.push_back({"HAP units (" + platform.id + ", " + std::to_string(fleet) +
                                     " with learning rate " + arch.learning_rate.to_string(4) + ")",
                                 CostPhase::capex, fleet_acquisition_cost(platform.capex_per_unit, fleet, learning), 1,
                                 SiteClass::platform});
  }
  if (arch.include_development_cost) {
    report.cost_items.push_back(
        {"HAP development", CostPhase::capex, platform.development_cost, 1, SiteClass::platform});
  }
  report.cost_items.push_back({"ground segment: CPE, collection point and gateway equipment", CostPhase::capex,
                               arch.ground_capex, 1, SiteClass::aggregation_site});
  report.cost_items.push_back({"HAP operations (" + platform.id + ")", CostPhase::opex_annual,
                               platform.opex_per_unit_year, fleet, SiteClass::platform});
  report.cost_items.push_back({"ground segment operations and backbone fees", CostPhase::opex_annual,
                               arch.ground_opex_annual, 1, SiteClass::backbone_fee});
  finish_costs(report, scenario);
  report.cash_flow_party = "mno";
  report.cash_flows = cost_flows(report.costs.capex_total, report.costs.opex_annual_total, horizon_years);
}

void assess_integrated(AssessmentReport& report, const ScenarioParams& scenario, const IntegratedArch& arch,
                       std::int64_t horizon_years) {
  const PlatformSpec& platform = arch.platform;
  if (arch.offers.empty()) throw Error(ErrorCode::validation, "integrated architecture needs at least one offer");

  WholesaleSummary w;
  w.cells = available_cells(platform.layout_cells, platform.redundancy_fraction) * arch.fleet_size;
  w.sellable_links =
      sellable_links(w.cells, arch.cell_rate_at_class, arch.contention_ratio, arch.offers.front().link_rate);
  w.rows = forecast(arch.demand, arch.offers, w.sellable_links, horizon_years);
  if (!arch.components.empty()) {
    for (const auto& offer : arch.offers) {
      w.delivered_availability[offer.id] =
          offer_delivered_availability(offer.tier, arch.components, arch.tier_topologies);
    }
  }

  const auto mno_offer = std::find_if(arch.offers.begin(), arch.offers.end(),
                                      [&](const WholesaleOffer& o) { return o.id == arch.mno_offer; });
  if (mno_offer == arch.offers.end()) {
    throw Error(ErrorCode::unknown_reference, "MNO offer '" + arch.mno_offer + "'");
  }
  report.cost_items.push_back({"CPE and collection equipment", CostPhase::capex, arch.mno_ground_capex, 1,
                               SiteClass::aggregation_site});
  report.cost_items.push_back({"wholesale '" + mno_offer->id + "' links", CostPhase::opex_annual,
                               mno_offer->monthly_price.times(12), scenario.site_count, SiteClass::backbone_fee});
  finish_costs(report, scenario);

  Money operator_capex = platform.capex_per_unit.times(arch.fleet_size);
  if (arch.include_development_cost) operator_capex += platform.development_cost;
  const Money operator_opex = platform.opex_per_unit_year.times(arch.fleet_size);
  report.cash_flow_party = "hap_operator";
  for (const auto& row : w.rows) {
    Money amount = row.income_annual - operator_opex;
    if (row.year == 0) amount -= operator_capex;
    report.cash_flows.push_back({row.year, amount});
  }
  report.wholesale = std::move(w);
}

}  // namespace

AssessmentReport assess(const ScenarioParams& scenario, const NamedArchitecture& architecture,
                        std::int64_t horizon_years, double discount_rate) {
  if (horizon_years < 1) throw Error(ErrorCode::validation, "horizon must be >= 1 year");
  AssessmentReport report;
  report.architecture_id = architecture.id;
  report.architecture_label = architecture.label;
  report.kind = std::string(architecture_kind(architecture.config));
  report.subscribers = subscribers(scenario.service_area, scenario.penetration);
  report.backhaul_demand = backhaul_demand(scenario.site_count, scenario.per_site_uplink, scenario.per_site_downlink);

  try {
    if (const auto* sat = std::get_if<SatelliteArch>(&architecture.config)) {
      assess_satellite(report, scenario, *sat, horizon_years);
    } else if (const auto* hap = std::get_if<HapDirectArch>(&architecture.config)) {
      assess_hap_direct(report, scenario, *hap, horizon_years);
    } else {
      assess_integrated(report, scenario, std::get<IntegratedArch>(architecture.config), horizon_years);
    }
    finish_cash_flows(report, discount_rate);
  } catch (const Error& e) {
    throw Error(e.code(), "architecture '" + architecture.id + "': " + e.detail());
  }
  return report;
}

AssessmentReport assess(const Scenario& scenario, const std::string& architecture_id) {
  return assess(scenario.params, scenario.architecture(architecture_id), scenario.settings.horizon_years,
                scenario.settings.discount_rate);
}

}  // namespace hapecon
