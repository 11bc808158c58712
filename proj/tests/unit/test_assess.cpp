#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "hapecon/assess.hpp"
#include "hapecon/catalog.hpp"
#include "hapecon/error.hpp"
#include "hapecon/report.hpp"

using namespace hapecon;

namespace {

Money meur(double v) { return Money::from_cents(std::llround(v * 1e8)); }

const Scenario& scenario() {
  static const Scenario s = defaults::scenario();
  return s;
}

}  // namespace

TEST(Assess, Satellite) {
  const auto r = assess(scenario(), "sat");
  EXPECT_EQ(r.subscribers, 18000);
  EXPECT_EQ(r.backhaul_demand, DataRate::from_mbps(756));
  ASSERT_TRUE(r.spectrum);
  EXPECT_EQ(r.spectrum->required_bandwidth, Bandwidth::from_khz(385'000));
  EXPECT_EQ(r.spectrum->transponder_count, 6);
  EXPECT_EQ(r.costs.capex_total, meur(6.32));
  EXPECT_EQ(r.costs.opex_annual_total, meur(11.34));
  EXPECT_TRUE(r.above_arpu);
  ASSERT_TRUE(r.link);
  EXPECT_EQ(r.link->downtime_hours_per_year.to_string(), "3.50");
  EXPECT_TRUE(r.feasible);
}

TEST(Assess, HapDirect) {
  auto r = assess(scenario(), "hap-2a");
  EXPECT_EQ(r.costs.capex_total, meur(4.7));
  EXPECT_EQ(r.costs.opex_annual_total, meur(1.1));
  EXPECT_EQ(r.per_subscriber_monthly.cents(), 944);
  EXPECT_TRUE(r.above_arpu);
  EXPECT_TRUE(r.feasible);

  r = assess(scenario(), "hap-2b");
  EXPECT_EQ(r.costs.capex_total, meur(30.9));
  EXPECT_EQ(r.costs.opex_annual_total, meur(4.1));
  ASSERT_TRUE(r.feasibility);
  EXPECT_FALSE(r.feasibility->gateway_ok.has_value());
  EXPECT_TRUE(r.feasible);
}

TEST(Assess, SinglePlaneAtHighAvailabilityIsInfeasible) {
  const auto r = assess(scenario(), "hap-plane-999");
  EXPECT_FALSE(r.feasible);
  ASSERT_TRUE(r.feasibility);
  EXPECT_EQ(r.feasibility->binding_constraint, BindingConstraint::fronthaul);
  EXPECT_EQ(r.feasibility->platforms_required, 3);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Assess, PlaneFleetSizedByFronthaul) {
  const auto r = assess(scenario(), "hap-plane-999-fleet");
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.feasibility->fleet_size, 3);
  EXPECT_EQ(r.costs.capex_total, meur(12.7));
  EXPECT_EQ(r.costs.opex_annual_total, meur(3.1));
}

TEST(Assess, LearningCurveAppliesToFleet) {
  Scenario s = scenario();
  for (auto& a : s.architectures) {
    if (a.id == "hap-plane-999-fleet") std::get<HapDirectArch>(a.config).learning_rate = Decimal::from_double(0.8);
  }
  // 4 + 3.2 + 4 * 0.8^log2(3) MEUR for the units, 0.7 MEUR ground.
  const double third = 4.0 * std::pow(0.8, std::log2(3.0));
  const auto r = assess(s, "hap-plane-999-fleet");
  EXPECT_NEAR(r.costs.capex_total.cents() / 1e8, 4.0 + 3.2 + third + 0.7, 1e-8);
}

TEST(Assess, IntegratedReproducesForecast) {
  const auto r = assess(scenario(), "integrated");
  ASSERT_TRUE(r.wholesale);
  EXPECT_EQ(r.wholesale->sellable_links, 576);
  ASSERT_EQ(r.wholesale->rows.size(), 10u);
  const std::array<double, 4> income = {3.672, 4.62, 5.628, 5.874};
  const std::array<const char*, 4> percent = {"63.2", "73.3", "85.8", "100.0"};
  for (int i = 0; i < 4; ++i) {
    const auto& row = r.wholesale->rows[static_cast<std::size_t>(3 * i)];
    EXPECT_EQ(row.income_annual, meur(income[static_cast<std::size_t>(i)]));
    EXPECT_EQ(row.utilization_percent.to_string(), percent[static_cast<std::size_t>(i)]);
  }
  EXPECT_EQ(r.per_subscriber_monthly.cents(), 215);
  EXPECT_FALSE(r.above_arpu);
  EXPECT_EQ(r.cash_flow_party, "hap_operator");
}

TEST(Assess, IntegratedOperatorCashFlows) {
  // Operator flows at r = 0: incomes minus 1 MEUR a year of operations, minus the
  // 4 MEUR platform in year 0. The incomes are the link counts times monthly prices.
  const auto demand = defaults::wholesale_demand();
  double expected = -4.0;
  for (const auto& year : demand) {
    expected += 12.0 * (250.0 * year.at("aerial") + 1000.0 * year.at("aerial_failover") +
                        2000.0 * year.at("complete_ha")) / 1e6 - 1.0;
  }
  auto r = assess(scenario(), "integrated");
  EXPECT_NEAR(r.npv.cents() / 1e8, expected, 1e-8);
  EXPECT_GT(r.npv, Money{});
  ASSERT_TRUE(r.irr);

  Scenario s = scenario();
  for (auto& a : s.architectures) {
    if (a.id == "integrated") std::get<IntegratedArch>(a.config).include_development_cost = true;
  }
  r = assess(s, "integrated");
  EXPECT_NEAR(r.npv.cents() / 1e8, expected - 50.0, 1e-8);
  EXPECT_LT(r.npv, Money{});
}

TEST(Assess, DiscountingLowersNpv) {
  Scenario s = scenario();
  const Money undiscounted = assess(s, "integrated").npv;
  s.settings.discount_rate = 0.08;
  EXPECT_LT(assess(s, "integrated").npv, undiscounted);
}

TEST(Assess, UnknownArchitecture) {
  try {
    assess(scenario(), "nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_reference);
  }
}

TEST(Report, CompareKeepsInputOrder) {
  const auto t = compare(scenario(), {"sat", "hap-2a", "hap-2b"}, 3);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0].architecture_id, "sat");
  EXPECT_EQ(t.rows[1].capex_total, meur(4.7));
  EXPECT_EQ(t.rows[1].opex_annual, meur(1.1));
  for (const auto& row : t.rows) {
    EXPECT_GE(row.capex_total, t.rows[1].capex_total);
    EXPECT_GE(row.opex_annual, t.rows[1].opex_annual);
  }
}

TEST(Report, CompareIdenticalRows) {
  const auto t = compare(scenario(), {"sat", "sat"});
  EXPECT_EQ(t.rows[0].capex_total, t.rows[1].capex_total);
  EXPECT_EQ(t.rows[0].per_subscriber_monthly, t.rows[1].per_subscriber_monthly);
  EXPECT_EQ(t.rows[0].notes, t.rows[1].notes);
}

TEST(Report, CompareReportsFailingRow) {
  Scenario s = scenario();
  for (auto& a : s.architectures) {
    if (a.id == "hap-2b") std::get<HapDirectArch>(a.config).require_gateway = true;
  }
  const auto t = compare(s, {"hap-2a", "hap-2b"});
  EXPECT_TRUE(t.rows[0].feasible);
  EXPECT_FALSE(t.rows[1].feasible);
  EXPECT_NE(t.rows[1].notes.find("MISSING_PARAMETER"), std::string::npos);
}

TEST(Report, PlatformSummaries) {
  const auto p = platform_summaries(scenario(), Decimal::from_int(4));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].available_cells, 18);
  EXPECT_EQ(p[1].available_cells, 97);
  EXPECT_EQ(p[0].density_per_km2.to_string(), "0.20");
  EXPECT_EQ(p[1].density_per_km2.to_string(), "1.03");
}

TEST(Report, DigestIgnoresKeyOrderAndWhitespace) {
  const auto a = nlohmann::json::parse(R"({"b": 1, "a": [1, 2]})");
  const auto b = nlohmann::json::parse("{\"a\":[1,2],\n  \"b\":1}");
  EXPECT_EQ(scenario_digest(a), scenario_digest(b));
  EXPECT_NE(scenario_digest(a), scenario_digest(nlohmann::json::parse(R"({"a": [2, 1], "b": 1})")));
  // SHA-256 of "{}".
  EXPECT_EQ(scenario_digest(nlohmann::json::object()),
            "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST(Report, FormatsAgreeOnDisplayedValues) {
  const auto r = assess(scenario(), "sat");
  const ReportEnvelope env{};
  const std::string table = render(r, OutputFormat::table, env);
  const std::string csv = render(r, OutputFormat::csv, env);
  const auto doc = nlohmann::json::parse(render(r, OutputFormat::structured, env));
  const auto& costs = doc["body"]["costs"];
  for (const auto* key : {"capex_total", "opex_annual_total"}) {
    const std::string shown = costs[key]["display"];
    EXPECT_NE(table.find(shown), std::string::npos) << key;
    EXPECT_NE(csv.find("," + shown + "\n"), std::string::npos) << key;
  }
  EXPECT_EQ(costs["capex_total"]["cents"], 632'000'000);
  EXPECT_EQ(doc["body"]["spectrum"]["required_bandwidth"]["display"], "385.0");
  EXPECT_FALSE(doc["envelope"].contains("generated_at"));
}

TEST(Report, ParseFormat) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_EQ(parse_format("structured"), OutputFormat::structured);
  EXPECT_THROW(parse_format("xml"), Error);
}
