#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hapecon/assess.hpp"
#include "hapecon/reliability.hpp"

namespace hapecon {

inline constexpr std::string_view tool_version = "0.1.0";

enum class OutputFormat { table, structured, csv };
OutputFormat parse_format(std::string_view text);

struct ReportEnvelope {
  std::string tool_version{hapecon::tool_version};
  std::string scenario_digest;
  /// Omitted from output when empty; never part of the digest.
  std::string timestamp;
};

/// SHA-256 (hex) of the sorted-key, whitespace-free form of the document.
std::string scenario_digest(const nlohmann::json& document);

struct ComparisonRow {
  std::string architecture_id;
  std::string label;
  Money capex_total;
  Money opex_annual;
  Money per_subscriber_monthly;
  bool above_arpu = false;
  bool feasible = false;
  std::string notes;
};

struct ComparisonTable {
  Money arpu_monthly;
  std::vector<ComparisonRow> rows;
};

/// One row per id, in input order. A failing architecture yields a row
/// marked infeasible with the error in its notes. Architectures are
/// evaluated on up to `workers` threads.
ComparisonTable compare(const Scenario& scenario, const std::vector<std::string>& architecture_ids,
                        unsigned workers = 1);

struct PlatformSummary {
  std::string id;
  PlatformKind kind{};
  std::int64_t layout_cells = 0;
  std::int64_t available_cells = 0;
  Area covered_area;
  DataRate clear_air;
  Fixed<2> density_per_km2;
  std::map<Availability, DataRate> derating;
  std::optional<DataRate> gateway_capacity;
  Money development_cost;
  Money capex_per_unit;
  Money opex_per_unit_year;
};

std::vector<PlatformSummary> platform_summaries(const Scenario& scenario, Decimal contention);

struct AvailabilityRow {
  std::string name;
  Availability analytic;
  Fixed<2> downtime_hours;
  MonteCarloEstimate simulated;
};

/// Analytic and Monte Carlo availability for every path the scenario
/// defines (named paths, satellite links, HAP fronthaul, offer tiers),
/// optionally restricted to one architecture.
std::vector<AvailabilityRow> availability_study(const Scenario& scenario,
                                                const std::optional<std::string>& architecture_id,
                                                std::int64_t trials, std::uint64_t seed);

struct ForecastReport {
  std::string architecture_id;
  std::int64_t sellable_links = 0;
  std::vector<std::string> offer_ids;
  std::vector<ForecastRow> rows;
};

/// Forecast of the first integrated architecture (or the named one).
ForecastReport forecast_report(const Scenario& scenario, const std::optional<std::string>& architecture_id,
                               std::int64_t years);

std::string render(const AssessmentReport& report, OutputFormat format, const ReportEnvelope& envelope);
std::string render(const ComparisonTable& table, OutputFormat format, const ReportEnvelope& envelope);
std::string render(const ForecastReport& forecast, OutputFormat format, const ReportEnvelope& envelope);
std::string render(const std::vector<PlatformSummary>& platforms, OutputFormat format,
                   const ReportEnvelope& envelope);
std::string render(const std::vector<AvailabilityRow>& rows, OutputFormat format, const ReportEnvelope& envelope);

nlohmann::json to_json(const AssessmentReport& report);
nlohmann::json to_json(const FeasibilityReport& feasibility);

}  // namespace hapecon
