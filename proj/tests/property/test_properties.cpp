// Randomized invariant checks. Every generator is seeded so failures replay.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "hapecon/assess.hpp"
#include "hapecon/catalog.hpp"
#include "hapecon/dimensioning.hpp"
#include "hapecon/economics.hpp"
#include "hapecon/error.hpp"
#include "hapecon/reliability.hpp"
#include "hapecon/report.hpp"
#include "hapecon/scenario_io.hpp"

using namespace hapecon;

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Availability random_availability(Rng& rng) {
  // Mix coarse and fine values, including some very close to 1.
  switch (uniform_int(rng, 0, 2)) {
    case 0: return Availability::from_raw(uniform_int(rng, 1, Availability::one - 1));
    case 1: return Availability::from_raw(Availability::one - uniform_int(rng, 1, 10'000'000));
    default: return Availability::from_raw(uniform_int(rng, 90, 9999) * 100'000);
  }
}

PathModel random_tree(Rng& rng, int depth) {
  if (depth == 0 || uniform_int(rng, 0, 3) == 0) return PathModel::leaf("c", random_availability(rng));
  std::vector<PathModel> children;
  const auto n = uniform_int(rng, 1, 4);
  for (std::int64_t i = 0; i < n; ++i) children.push_back(random_tree(rng, depth - 1));
  return uniform_int(rng, 0, 1) ? PathModel::series(std::move(children)) : PathModel::parallel(std::move(children));
}

void check_bounds(const PathModel& m) {
  const Availability a = path_availability(m);
  ASSERT_GE(a.raw(), 0);
  ASSERT_LT(a.raw(), Availability::one);
  if (m.kind() == PathModel::Kind::leaf) return;
  std::vector<Availability> kids;
  for (const auto& c : m.children()) {
    check_bounds(c);
    kids.push_back(path_availability(c));
  }
  if (m.kind() == PathModel::Kind::series) {
    EXPECT_LE(a, *std::min_element(kids.begin(), kids.end()));
  } else {
    EXPECT_GE(a, *std::max_element(kids.begin(), kids.end()));
  }
}

/// Plain double evaluation, independent of the fixed-point code.
double reference_availability(const PathModel& m) {
  switch (m.kind()) {
    case PathModel::Kind::leaf:
      return m.availability().to_double();
    case PathModel::Kind::series: {
      double p = 1;
      for (const auto& c : m.children()) p *= reference_availability(c);
      return p;
    }
    case PathModel::Kind::parallel: {
      double q = 1;
      for (const auto& c : m.children()) q *= 1 - reference_availability(c);
      return 1 - q;
    }
    default:
      throw std::logic_error("unbound reference");
  }
}

}  // namespace

TEST(ReliabilityProperties, SeriesBelowMinParallelAboveMax) {
  Rng rng(20240601);
  for (int i = 0; i < 1500; ++i) check_bounds(random_tree(rng, 4));
}

TEST(ReliabilityProperties, FixedPointAgreesWithDoubleReference) {
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const auto m = random_tree(rng, 3);
    EXPECT_NEAR(exact_path_availability(m).to_double(), reference_availability(m), 1e-8);
  }
}

TEST(ReliabilityProperties, MonteCarloWithinFourStandardErrors) {
  Rng rng(99);
  constexpr std::int64_t trials = 100000;
  for (int i = 0; i < 25; ++i) {
    const auto m = random_tree(rng, 3);
    const double p = exact_path_availability(m).to_double();
    const auto est = simulate_availability(m, trials, static_cast<std::uint64_t>(rng()));
    const double se = std::sqrt(p * (1 - p) / trials);
    // A floor of one trial keeps near-certain paths from demanding exactness.
    EXPECT_LE(std::abs(est.availability - p), std::max(4 * se, 1.0 / trials)) << "tree " << i << " p=" << p;
  }
}

TEST(ReliabilityProperties, FailoverNeverWorseThanAerialOnly) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const std::map<std::string, Availability> c = {{"aerial", random_availability(rng)},
                                                   {"mno_backhaul", random_availability(rng)},
                                                   {"operator_backhaul", random_availability(rng)}};
    EXPECT_GE(offer_delivered_availability(OfferTier::aerial_with_failover, c),
              offer_delivered_availability(OfferTier::aerial_only, c));
  }
}

TEST(DimensioningProperties, DeratingNonIncreasing) {
  Rng rng(11);
  for (const auto& p : defaults::platforms()) {
    const auto top = p.derating_table.rbegin()->first.raw();
    std::vector<std::int64_t> raws;
    for (int i = 0; i < 500; ++i) raws.push_back(uniform_int(rng, 0, top));
    std::sort(raws.begin(), raws.end());
    DataRate prev = derated_fronthaul(p, Availability::from_raw(raws.front()));
    for (auto raw : raws) {
      const DataRate cur = derated_fronthaul(p, Availability::from_raw(raw));
      EXPECT_LE(cur, prev);
      prev = cur;
    }
  }
}

TEST(DimensioningProperties, AvailableCellsBounded) {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const auto n = uniform_int(rng, 0, 500);
    const auto r = Decimal::from_raw(uniform_int(rng, 0, Decimal::scale - 1));
    const auto cells = available_cells(n, r);
    EXPECT_LE(cells, n);
    EXPECT_GE(cells, 0);
    if (r.raw() == 0) EXPECT_EQ(cells, n);
    // Strictly fewer cells unless the redundancy share rounds away.
    if (cells == n && n > 0 && r.raw() > 0) {
      EXPECT_LT(static_cast<double>(n) * r.to_double(), 1.0);
    }
  }
}

TEST(DimensioningProperties, TranspondersCoverBandwidth) {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const auto demand = DataRate::from_kbps(uniform_int(rng, 0, 5'000'000));
    const auto eff = Decimal::from_raw(uniform_int(rng, Decimal::scale / 10, 6 * Decimal::scale));
    const auto tp = Bandwidth::from_khz(uniform_int(rng, 1000, 120'000));
    const auto plan = satellite_spectrum(demand, eff, tp);
    EXPECT_GE(plan.transponder_count * tp.khz(), plan.required_bandwidth.khz());
    EXPECT_LT((plan.transponder_count - 1) * tp.khz(), std::max<std::int64_t>(plan.required_bandwidth.khz(), 1));
  }
}

TEST(DimensioningProperties, PlatformsRequiredIsMinimal) {
  Rng rng(14);
  for (int i = 0; i < 400; ++i) {
    ScenarioParams s;
    s.service_area = Area::from_km2(uniform_int(rng, 100, 8000));
    s.site_count = uniform_int(rng, 1, 300);
    s.per_site_uplink = DataRate::from_mbps(uniform_int(rng, 0, 10));
    s.per_site_downlink = DataRate::from_mbps(uniform_int(rng, 0, 10));
    PlatformSpec p = defaults::platforms()[static_cast<std::size_t>(uniform_int(rng, 0, 1))];
    p.covered_area = Area::from_km2(uniform_int(rng, 500, 4000));
    const auto a = uniform_int(rng, 0, 1) ? Availability::parse("0.99") : Availability::parse("0.999");
    const auto report = fleet_feasibility(s, p, a);
    auto ok = [&](std::int64_t n) {
      const auto f = fleet_feasibility(s, p, a, n);
      return f.coverage_ok && f.fronthaul_ok;
    };
    std::int64_t brute = 1;
    while (!ok(brute)) ++brute;
    EXPECT_EQ(report.platforms_required, brute);
  }
}

TEST(DimensioningProperties, SellableLinksScaleLinearly) {
  Rng rng(15);
  for (int i = 0; i < 2000; ++i) {
    const auto cells = uniform_int(rng, 0, 200);
    const auto cell = DataRate::from_kbps(uniform_int(rng, 1000, 200'000));
    const auto contention = Decimal::from_raw(uniform_int(rng, Decimal::scale, 10 * Decimal::scale));
    const auto link = DataRate::from_kbps(uniform_int(rng, 500, 50'000));
    const auto one = sellable_links(cells, cell, contention, link);
    const auto two = sellable_links(2 * cells, cell, contention, link);
    EXPECT_GE(two, 2 * one);
    EXPECT_LE(two, 2 * one + 1);
  }
}

TEST(ScenarioProperties, DeclaredDemandRecomputes) {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    nlohmann::json doc = {{"scenario",
                           {{"site_count", uniform_int(rng, 1, 400)},
                            {"per_site_uplink_kbps", uniform_int(rng, 0, 9000)},
                            {"per_site_downlink_kbps", uniform_int(rng, 0, 9000)}}}};
    const Scenario s = validate_scenario(doc);
    doc["scenario"]["declared_total_demand_kbps"] =
        s.params.site_count * (s.params.per_site_uplink.kbps() + s.params.per_site_downlink.kbps());
    const Scenario declared = validate_scenario(doc);
    EXPECT_EQ(backhaul_demand(declared.params.site_count, declared.params.per_site_uplink,
                              declared.params.per_site_downlink),
              declared.params.declared_total_demand.value());
    doc["scenario"]["declared_total_demand_kbps"] = doc["scenario"]["declared_total_demand_kbps"].get<std::int64_t>() + 1;
    EXPECT_THROW(validate_scenario(doc), Error);
  }
}

TEST(ScenarioProperties, ValidationIsIdempotent) {
  std::ifstream in(HAPECON_SCENARIO_DIR "/default.json");
  const auto base = nlohmann::json::parse(in);
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    auto doc = base;
    doc["scenario"].erase("declared_total_demand_mbps");
    doc["scenario"]["site_count"] = uniform_int(rng, 1, 500);
    doc["scenario"]["service_area_km2"] = uniform_int(rng, 1, 9000);
    doc["scenario"]["arpu_monthly_eur"] = std::to_string(uniform_int(rng, 1, 9999)) + ".25";
    doc["platforms"][0]["redundancy_fraction"] = "0." + std::to_string(uniform_int(rng, 0, 99));
    const Scenario once = validate_scenario(doc);
    const auto canonical = scenario_to_json(once);
    const Scenario twice = validate_scenario(canonical);
    EXPECT_EQ(scenario_to_json(twice), canonical);
    EXPECT_EQ(twice.params, once.params);
  }
}

TEST(MoneyProperties, DisplayRoundTripLosesUnderOneDigit) {
  Rng rng(18);
  for (int i = 0; i < 5000; ++i) {
    const Money m = Money::from_cents(uniform_int(rng, -50'000'000'000, 50'000'000'000));
    for (auto unit : {MoneyUnit::eur, MoneyUnit::keur, MoneyUnit::meur}) {
      for (int shown = 0; shown <= 2; ++shown) {
        const Money back = Money::parse(m.format(unit, shown), unit);
        const std::int64_t last_digit = pow10(unit_digits(unit) - shown);
        EXPECT_LE(std::abs(back.cents() - m.cents()), last_digit / 2);
      }
    }
  }
}

TEST(EconomicsProperties, RollupPermutationInvariantAndAdditive) {
  Rng rng(19);
  const std::array<SiteClass, 5> classes = {SiteClass::cell_site, SiteClass::aggregation_site, SiteClass::platform,
                                            SiteClass::backbone_fee, SiteClass::space_segment_lease};
  for (int i = 0; i < 300; ++i) {
    std::vector<CostItem> items;
    const auto n = uniform_int(rng, 0, 30);
    for (std::int64_t k = 0; k < n; ++k) {
      items.push_back({"item", uniform_int(rng, 0, 1) ? CostPhase::capex : CostPhase::opex_annual,
                       Money::from_cents(uniform_int(rng, 0, 1'000'000'000)), uniform_int(rng, 0, 200),
                       classes[static_cast<std::size_t>(uniform_int(rng, 0, 4))]});
    }
    const auto whole = rollup(items);
    auto shuffled = items;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(rollup(shuffled), whole);

    const auto cut = static_cast<std::size_t>(uniform_int(rng, 0, n));
    const auto left = rollup(std::span(items).first(cut));
    const auto right = rollup(std::span(items).subspan(cut));
    EXPECT_EQ(left.capex_total + right.capex_total, whole.capex_total);
    EXPECT_EQ(left.opex_annual_total + right.opex_annual_total, whole.opex_annual_total);
  }
}

TEST(EconomicsProperties, PerSubscriberMonotone) {
  Rng rng(20);
  for (int i = 0; i < 2000; ++i) {
    const auto months = uniform_int(rng, 1, 120);
    const auto subs = uniform_int(rng, 1, 100'000);
    const Money capex = Money::from_cents(uniform_int(rng, 1, 10'000'000'000));
    const Money opex = Money::from_cents(uniform_int(rng, 1, 10'000'000'000));
    const Money base = per_subscriber_monthly(capex, opex, months, subs);
    // Increments large enough to move the exact value by at least one cent.
    const Money more_capex = capex + Money::from_cents(2 * months * subs);
    const Money more_opex = opex + Money::from_cents(24 * subs);
    EXPECT_GT(per_subscriber_monthly(more_capex, opex, months, subs), base);
    EXPECT_GT(per_subscriber_monthly(capex, more_opex, months, subs), base);
    EXPECT_LE(per_subscriber_monthly(capex, opex, months, subs + 1), base);
    if (base.cents() >= 4) EXPECT_LT(per_subscriber_monthly(capex, opex, months, 2 * subs), base);
  }
}

TEST(EconomicsProperties, NpvAtZeroIsExactSum) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    CashFlowSeries f;
    Money sum;
    const auto n = uniform_int(rng, 1, 30);
    for (std::int64_t t = 0; t < n; ++t) {
      const Money m = Money::from_cents(uniform_int(rng, -1'000'000'000, 1'000'000'000));
      f.push_back({t, m});
      sum += m;
    }
    EXPECT_EQ(npv(f, 0.0), sum);
  }
}

TEST(EconomicsProperties, NpvAtIrrRoundsToZero) {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    CashFlowSeries f;
    std::int64_t t = 0;
    std::int64_t outlay = 0;
    for (std::int64_t k = uniform_int(rng, 1, 3); k > 0; --k) {
      const auto c = uniform_int(rng, 100'000, 1'000'000'000);
      outlay += c;
      f.push_back({t++, Money::from_cents(-c)});
    }
    const auto n = uniform_int(rng, 1, 15);
    // Total inflow between 0.3x and 4x the outlay keeps the root inside (-0.99, 10).
    const double ratio = std::uniform_real_distribution<double>(0.3, 4.0)(rng);
    for (std::int64_t k = 0; k < n; ++k) {
      const auto c = std::max<std::int64_t>(1, std::llround(ratio * static_cast<double>(outlay) / static_cast<double>(n)));
      f.push_back({t++, Money::from_cents(c)});
    }
    const auto r = irr(f);
    EXPECT_FALSE(r.multiple_roots);
    EXPECT_EQ(npv(f, r.rate), Money{}) << "series " << i << " rate " << r.rate;
  }
}

TEST(EconomicsProperties, LearningDoublingRatio) {
  Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    const Money first = Money::from_cents(uniform_int(rng, 100, 10'000'000'000));
    const double lr = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
    const auto n = uniform_int(rng, 1, 500);
    const auto single = learning_unit_cost(first, n, lr).cents();
    const auto doubled = learning_unit_cost(first, 2 * n, lr).cents();
    EXPECT_LE(std::abs(static_cast<double>(doubled) - lr * static_cast<double>(single)), 1.0);
  }
}

TEST(EconomicsProperties, IncomeIsLinear) {
  Rng rng(24);
  const auto offers = defaults::wholesale_offers();
  auto random_year = [&] {
    YearDemand d;
    for (const auto& o : offers) d[o.id] = uniform_int(rng, 0, 5000);
    return d;
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_year(), b = random_year();
    YearDemand sum, scaled;
    const auto k = uniform_int(rng, 0, 20);
    for (const auto& o : offers) {
      sum[o.id] = a.at(o.id) + b.at(o.id);
      scaled[o.id] = k * a.at(o.id);
    }
    EXPECT_EQ(wholesale_income(sum, offers), wholesale_income(a, offers) + wholesale_income(b, offers));
    EXPECT_EQ(wholesale_income(scaled, offers), wholesale_income(a, offers).times(k));
  }
}

TEST(ReportProperties, MachineOutputIsDeterministic) {
  Rng rng(25);
  const Scenario base = defaults::scenario();
  for (int i = 0; i < 20; ++i) {
    Scenario s = base;
    s.params.site_count = uniform_int(rng, 1, 108);
    s.params.declared_total_demand.reset();
    const ReportEnvelope env{.scenario_digest = scenario_digest(scenario_to_json(s))};
    for (const auto& a : s.architectures) {
      const auto first = render(assess(s, a.id), OutputFormat::structured, env);
      const auto second = render(assess(s, a.id), OutputFormat::structured, env);
      EXPECT_EQ(first, second);
      EXPECT_EQ(render(assess(s, a.id), OutputFormat::csv, env), render(assess(s, a.id), OutputFormat::csv, env));
    }
  }
}
