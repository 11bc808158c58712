#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hapecon/dimensioning.hpp"
#include "hapecon/domain.hpp"
#include "hapecon/economics.hpp"

namespace hapecon {

struct LinkAvailability {
  Availability availability;
  Fixed<2> downtime_hours_per_year;
};

struct FronthaulCapacity {
  std::int64_t available_cells = 0;
  DataRate clear_air;
  DataRate derated;
  Availability availability;
};

struct WholesaleSummary {
  std::int64_t cells = 0;
  std::int64_t sellable_links = 0;
  std::vector<ForecastRow> rows;
  std::map<std::string, Availability> delivered_availability;  // by offer id
};

struct AssessmentReport {
  std::string architecture_id;
  std::string architecture_label;
  std::string kind;

  std::int64_t subscribers = 0;
  DataRate backhaul_demand;

  std::optional<SpectrumPlan> spectrum;
  std::optional<LinkAvailability> link;
  std::optional<FeasibilityReport> feasibility;
  std::optional<FronthaulCapacity> fronthaul;
  std::optional<WholesaleSummary> wholesale;

  /// Costs borne by the MNO serving the scenario's subscribers.
  std::vector<CostItem> cost_items;
  CostRollup costs;
  Money per_subscriber_monthly;
  Money arpu_monthly;
  bool above_arpu = false;

  /// Cash flows of the party carrying the infrastructure: the MNO for
  /// satellite and HAP-direct, the HAP operator for the integrated case.
  std::string cash_flow_party;
  CashFlowSeries cash_flows;
  double discount_rate = 0.0;
  Money npv;
  std::optional<IrrResult> irr;

  bool feasible = true;
  std::vector<std::string> notes;
};

/// Runs dimensioning, feasibility, cost rollup, per-subscriber costing and,
/// for the integrated architecture, the wholesale forecast. Pure.
AssessmentReport assess(const ScenarioParams& scenario, const NamedArchitecture& architecture,
                        std::int64_t horizon_years, double discount_rate);

AssessmentReport assess(const Scenario& scenario, const std::string& architecture_id);

}  // namespace hapecon
