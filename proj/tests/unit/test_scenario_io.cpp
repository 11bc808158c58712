#include <fstream>

#include <gtest/gtest.h>

#include "hapecon/catalog.hpp"
#include "hapecon/error.hpp"
#include "hapecon/scenario_io.hpp"

using namespace hapecon;
using nlohmann::json;

namespace {

json bundled() {
  std::ifstream in(HAPECON_SCENARIO_DIR "/default.json");
  return json::parse(in);
}

ErrorCode code_of(const json& doc, std::string* detail = nullptr) {
  try {
    validate_scenario(doc);
  } catch (const Error& e) {
    if (detail) *detail = e.detail();
    return e.code();
  }
  ADD_FAILURE() << "scenario accepted";
  return ErrorCode::io;
}

}  // namespace

TEST(ScenarioIo, BundledFileMatchesCatalog) {
  const Scenario s = validate_scenario(bundled());
  EXPECT_EQ(s.params.service_area, Area::from_km2(1800));
  EXPECT_EQ(s.params.penetration, Decimal::from_int(10));
  EXPECT_EQ(s.params.site_count, 108);
  EXPECT_EQ(s.params.per_site_uplink, DataRate::from_mbps(2));
  EXPECT_EQ(s.params.per_site_downlink, DataRate::from_mbps(5));
  EXPECT_EQ(s.params.arpu_monthly, Money::from_cents(350));
  EXPECT_EQ(s.params.amortization_months, 60);
  EXPECT_EQ(scenario_to_json(s), scenario_to_json(defaults::scenario()));
}

TEST(ScenarioIo, EmptyDocumentTakesDefaults) {
  const Scenario s = validate_scenario(json::object());
  EXPECT_EQ(s.params, defaults::scenario_params());
  EXPECT_EQ(s.architectures.size(), defaults::scenario().architectures.size());
}

TEST(ScenarioIo, ZeroAmortizationRejected) {
  json doc = bundled();
  doc["scenario"]["amortization_months"] = 0;
  std::string detail;
  EXPECT_EQ(code_of(doc, &detail), ErrorCode::validation);
  EXPECT_NE(detail.find("amortization_months"), std::string::npos);
}

TEST(ScenarioIo, DeclaredDemandMismatch) {
  json doc = bundled();
  doc["scenario"]["per_site_uplink_mbps"] = 3;
  std::string detail;
  EXPECT_EQ(code_of(doc, &detail), ErrorCode::validation);
  EXPECT_NE(detail.find("declared_total_demand"), std::string::npos);
}

TEST(ScenarioIo, UnknownFieldRejected) {
  json doc = bundled();
  doc["scenario"]["colour"] = "blue";
  std::string detail;
  EXPECT_EQ(code_of(doc, &detail), ErrorCode::validation);
  EXPECT_NE(detail.find("colour"), std::string::npos);
}

TEST(ScenarioIo, UnknownPlatformReference) {
  json doc = bundled();
  doc["architectures"][1]["platform"] = "balloon";
  EXPECT_EQ(code_of(doc), ErrorCode::unknown_reference);
}

TEST(ScenarioIo, MixedLinkRatesRejected) {
  json doc = bundled();
  doc["architectures"][5]["offers"][0]["link_rate_mbps"] = 20;
  EXPECT_EQ(code_of(doc), ErrorCode::validation);
}

TEST(ScenarioIo, MoneyUnitsAreEquivalent) {
  json a = bundled(), b = bundled();
  a["platforms"][0].erase("capex_per_unit_meur");
  a["platforms"][0]["capex_per_unit_keur"] = 4000;
  b["platforms"][0].erase("capex_per_unit_meur");
  b["platforms"][0]["capex_per_unit_eur"] = "4000000.00";
  EXPECT_EQ(scenario_to_json(validate_scenario(a)), scenario_to_json(validate_scenario(b)));
  EXPECT_EQ(scenario_to_json(validate_scenario(a)), scenario_to_json(validate_scenario(bundled())));
}

TEST(ScenarioIo, DemandAnchorsInterpolate) {
  json doc = bundled();
  auto& arch = doc["architectures"][5];
  const json rows = arch["demand"];
  arch["demand"] = {{"anchors", {{"0", rows[0]}, {"3", rows[3]}, {"6", rows[6]}, {"9", rows[9]}}}};
  EXPECT_EQ(scenario_to_json(validate_scenario(doc)), scenario_to_json(validate_scenario(bundled())));
}

TEST(ScenarioIo, PathsRoundTrip) {
  const json doc = json::parse(R"({"paths": {"p": {"series": [
      {"label": "a", "availability": 0.99},
      {"parallel": [{"label": "b", "availability": "0.9"}, {"ref": "c"}]}]}}})");
  const Scenario s = validate_scenario(doc);
  const PathModel& p = s.paths.at("p");
  EXPECT_EQ(p.kind(), PathModel::Kind::series);
  EXPECT_EQ(p.leaf_count(), 3u);
  EXPECT_EQ(path_model_from_json(path_model_to_json(p), "p"), p);
}

TEST(ScenarioIo, MalformedText) {
  try {
    parse_scenario("{\"scenario\": ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation);
  }
  try {
    load_scenario("/nonexistent/scenario.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io);
  }
}

TEST(ScenarioIo, TooManyDigitsRejected) {
  json doc = bundled();
  doc["scenario"]["arpu_monthly_eur"] = "3.505";
  EXPECT_EQ(code_of(doc), ErrorCode::validation);
  doc = bundled();
  doc["scenario"]["penetration_per_km2"] = -1;
  EXPECT_EQ(code_of(doc), ErrorCode::validation);
}
