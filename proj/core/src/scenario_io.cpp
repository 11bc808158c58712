#include "hapecon/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hapecon/catalog.hpp"
#include "hapecon/dimensioning.hpp"
#include "hapecon/economics.hpp"
#include "hapecon/error.hpp"

namespace hapecon {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::validation, where + ": " + what);
}

std::int64_t scaled_number(const json& v, int digits, const std::string& where) {
  std::int64_t out = 0;
  if (v.is_string()) {
    if (!parse_scaled(v.get<std::string>(), digits, out)) invalid(where, "malformed decimal");
    // Re-parse with headroom to reject digits the type cannot hold.
    std::int64_t fine = 0;
    if (parse_scaled(v.get<std::string>(), digits + 1, fine) && fine != out * 10) {
      invalid(where, "more than " + std::to_string(digits) + " fractional digits");
    }
    return out;
  }
  if (v.is_number_integer()) {
    const int128 r = static_cast<int128>(v.get<std::int64_t>()) * pow10(digits);
    if (r > INT64_MAX || r < INT64_MIN) invalid(where, "value too large");
    return static_cast<std::int64_t>(r);
  }
  if (v.is_number_float()) {
    const double x = v.get<double>() * static_cast<double>(pow10(digits));
    if (!std::isfinite(x) || std::fabs(x) > 9.0e18) invalid(where, "value out of range");
    const double r = std::round(x);
    if (std::fabs(x - r) > 1e-6 + 1e-12 * std::fabs(r)) {
      invalid(where, "more than " + std::to_string(digits) + " fractional digits");
    }
    return static_cast<std::int64_t>(r);
  }
  invalid(where, "expected a number");
}

struct Suffix {
  std::string_view suffix;
  int digits;       // fractional digits accepted in this unit
  std::int64_t to;  // multiplier from the scaled value to base units
};

/// Wraps one JSON object, tracks consumed keys and rejects unknown ones.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string where) : node_(node), where_(std::move(where)) {
    if (!node_.is_object()) invalid(where_, "expected an object");
  }

  const std::string& where() const { return where_; }
  std::string field(std::string_view key) const { return where_ + "." + std::string(key); }

  const json* get(std::string_view key) {
    const auto it = node_.find(std::string(key));
    if (it == node_.end()) return nullptr;
    used_.insert(std::string(key));
    return &*it;
  }

  std::optional<std::int64_t> integer(std::string_view key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) invalid(field(key), "expected an integer");
    return v->get<std::int64_t>();
  }

  std::optional<bool> boolean(std::string_view key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) invalid(field(key), "expected true or false");
    return v->get<bool>();
  }

  std::optional<std::string> string(std::string_view key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) invalid(field(key), "expected a string");
    return v->get<std::string>();
  }

  std::optional<Decimal> decimal(std::string_view key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    return Decimal::from_raw(scaled_number(*v, Decimal::digits, field(key)));
  }

  std::optional<double> real(std::string_view key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) invalid(field(key), "expected a number");
    return v->get<double>();
  }

  std::optional<Availability> availability(std::string_view key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    return read_availability(*v, field(key));
  }

  /// Reads `base` followed by exactly one of the unit suffixes.
  std::optional<std::int64_t> with_unit(std::string_view base, std::initializer_list<Suffix> suffixes) {
    std::optional<std::int64_t> out;
    std::string found;
    for (const auto& s : suffixes) {
      const std::string key = std::string(base) + std::string(s.suffix);
      const json* v = get(key);
      if (!v) continue;
      if (out) invalid(where_, "both '" + found + "' and '" + key + "' given");
      found = key;
      const int128 r = static_cast<int128>(scaled_number(*v, s.digits, field(key))) * s.to;
      if (r > INT64_MAX || r < INT64_MIN) invalid(field(key), "value too large");
      out = static_cast<std::int64_t>(r);
    }
    return out;
  }

  std::optional<Money> money(std::string_view base) {
    const auto cents = with_unit(base, {{"_eur", 2, 1}, {"_keur", 5, 1}, {"_meur", 8, 1}});
    if (!cents) return std::nullopt;
    return Money::from_cents(*cents);
  }

  std::optional<DataRate> rate(std::string_view base) {
    const auto kbps = with_unit(base, {{"_kbps", 0, 1}, {"_mbps", 3, 1}, {"_gbps", 6, 1}});
    if (!kbps) return std::nullopt;
    return DataRate::from_kbps(*kbps);
  }

  std::optional<Area> area(std::string_view base) {
    const auto h = with_unit(base, {{"_km2", 2, 1}});
    if (!h) return std::nullopt;
    return Area::from_hundredths(*h);
  }

  std::optional<Bandwidth> bandwidth(std::string_view base) {
    const auto khz = with_unit(base, {{"_khz", 0, 1}, {"_mhz", 3, 1}});
    if (!khz) return std::nullopt;
    return Bandwidth::from_khz(*khz);
  }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!used_.count(key)) invalid(where_, "unknown field '" + key + "'");
    }
  }

  static Availability read_availability(const json& v, const std::string& where) {
    const std::int64_t raw = scaled_number(v, Availability::digits, where);
    if (raw < 0 || raw >= Availability::one) invalid(where, "availability must be in [0, 1)");
    return Availability::from_raw(raw);
  }

 private:
  const json& node_;
  std::string where_;
  std::set<std::string> used_;
};

template <typename Enum, std::size_t N>
Enum parse_enum(const std::string& text, const std::array<Enum, N>& values, const std::string& where) {
  for (Enum e : values) {
    if (to_string(e) == text) return e;
  }
  std::string allowed;
  for (Enum e : values) allowed += (allowed.empty() ? "" : ", ") + std::string(to_string(e));
  invalid(where, "'" + text + "' is not one of " + allowed);
}

constexpr std::array kPlatformKinds{PlatformKind::unmanned_solar_plane, PlatformKind::unmanned_airship};
constexpr std::array kPhases{CostPhase::capex, CostPhase::opex_annual};
constexpr std::array kSiteClasses{SiteClass::cell_site, SiteClass::aggregation_site, SiteClass::platform,
                                  SiteClass::backbone_fee, SiteClass::space_segment_lease};
constexpr std::array kTiers{OfferTier::aerial_only, OfferTier::aerial_with_failover,
                            OfferTier::complete_high_availability};

void require_non_negative(Money m, const std::string& where) {
  if (m.is_negative()) invalid(where, "cost must be >= 0");
}

ScenarioParams read_params(const json* node) {
  ScenarioParams p = defaults::scenario_params();
  if (!node) return p;
  ObjectReader r(*node, "scenario");
  if (auto v = r.area("service_area")) p.service_area = *v;
  if (auto v = r.decimal("penetration_per_km2")) p.penetration = *v;
  if (auto v = r.integer("site_count")) p.site_count = *v;
  if (auto v = r.rate("per_site_uplink")) p.per_site_uplink = *v;
  if (auto v = r.rate("per_site_downlink")) p.per_site_downlink = *v;
  if (auto v = r.money("arpu_monthly")) p.arpu_monthly = *v;
  if (auto v = r.integer("amortization_months")) p.amortization_months = *v;
  p.declared_total_demand = r.rate("declared_total_demand");
  r.finish();

  if (p.service_area.hundredths() <= 0) invalid("scenario.service_area_km2", "must be > 0");
  if (p.penetration.raw() <= 0) invalid("scenario.penetration_per_km2", "must be > 0");
  if (p.site_count < 1) invalid("scenario.site_count", "must be >= 1");
  if (p.per_site_uplink.kbps() < 0) invalid("scenario.per_site_uplink", "must be >= 0");
  if (p.per_site_downlink.kbps() < 0) invalid("scenario.per_site_downlink", "must be >= 0");
  if (p.arpu_monthly.is_negative()) invalid("scenario.arpu_monthly", "must be >= 0");
  if (p.amortization_months < 1) invalid("scenario.amortization_months", "must be >= 1");
  if (p.declared_total_demand) {
    const DataRate computed = backhaul_demand(p.site_count, p.per_site_uplink, p.per_site_downlink);
    if (computed != *p.declared_total_demand) {
      invalid("scenario.declared_total_demand",
              "site_count x (uplink + downlink) = " + computed.mbps_string(3) + " Mb/s but " +
                  p.declared_total_demand->mbps_string(3) + " Mb/s declared");
    }
  }
  return p;
}

PlatformSpec read_platform(const json& node, const std::string& where) {
  ObjectReader r(node, where);
  PlatformSpec p;
  p.id = r.string("id").value_or("");
  if (p.id.empty()) invalid(r.field("id"), "required");
  if (auto v = r.string("kind")) p.kind = parse_enum(*v, kPlatformKinds, r.field("kind"));
  p.layout_cells = r.integer("layout_cells").value_or(0);
  p.redundancy_fraction = r.decimal("redundancy_fraction").value_or(Decimal{});
  p.covered_area = r.area("covered_area").value_or(Area{});
  if (auto v = r.rate("per_cell_clear_air")) p.per_cell_clear_air = *v;
  if (const json* table = r.get("derating")) {
    if (!table->is_array()) invalid(r.field("derating"), "expected a list");
    for (std::size_t i = 0; i < table->size(); ++i) {
      ObjectReader e((*table)[i], r.field("derating") + "[" + std::to_string(i) + "]");
      const auto a = e.availability("availability");
      const auto c = e.rate("fronthaul");
      if (!a || !c) invalid(e.where(), "needs availability and fronthaul_mbps");
      e.finish();
      if (!p.derating_table.emplace(*a, *c).second) invalid(e.where(), "duplicate availability anchor");
    }
  }
  p.gateway_capacity = r.rate("gateway_capacity");
  p.development_cost = r.money("development_cost").value_or(Money{});
  p.capex_per_unit = r.money("capex_per_unit").value_or(Money{});
  p.opex_per_unit_year = r.money("opex_per_unit_year").value_or(Money{});
  r.finish();

  if (p.layout_cells < 1) invalid(r.field("layout_cells"), "must be >= 1");
  if (p.redundancy_fraction.raw() < 0 || p.redundancy_fraction >= Decimal::from_int(1)) {
    invalid(r.field("redundancy_fraction"), "must be in [0, 1)");
  }
  if (p.covered_area.hundredths() <= 0) invalid(r.field("covered_area_km2"), "must be > 0");
  if (p.per_cell_clear_air.kbps() <= 0) invalid(r.field("per_cell_clear_air"), "must be > 0");
  if (p.derating_table.empty()) invalid(r.field("derating"), "at least one anchor required");
  const DataRate ceiling = p.per_cell_clear_air.times(p.layout_cells);
  std::optional<DataRate> previous;
  for (const auto& [a, c] : p.derating_table) {
    if (c > ceiling) invalid(r.field("derating"), "capacity above layout_cells x per_cell_clear_air");
    if (previous && c > *previous) invalid(r.field("derating"), "capacity must not increase with availability");
    previous = c;
  }
  require_non_negative(p.development_cost, r.field("development_cost"));
  require_non_negative(p.capex_per_unit, r.field("capex_per_unit"));
  require_non_negative(p.opex_per_unit_year, r.field("opex_per_unit_year"));
  return p;
}

const PlatformSpec& lookup_platform(const std::vector<PlatformSpec>& platforms, const std::string& id,
                                    const std::string& where) {
  const auto it = std::find_if(platforms.begin(), platforms.end(), [&](const auto& p) { return p.id == id; });
  if (it == platforms.end()) throw Error(ErrorCode::unknown_reference, where + ": platform '" + id + "'");
  return *it;
}

std::vector<CostItem> read_cost_catalog(const json& node, const std::string& where, std::int64_t site_count) {
  if (!node.is_array()) invalid(where, "expected a list");
  std::vector<CostItem> items;
  for (std::size_t i = 0; i < node.size(); ++i) {
    ObjectReader r(node[i], where + "[" + std::to_string(i) + "]");
    CostItem item;
    item.label = r.string("label").value_or("");
    if (auto v = r.string("phase")) item.phase = parse_enum(*v, kPhases, r.field("phase"));
    item.unit_cost = r.money("unit_cost").value_or(Money{});
    item.quantity = r.integer("quantity").value_or(1);
    if (auto v = r.string("site_class")) item.site_class = parse_enum(*v, kSiteClasses, r.field("site_class"));
    if (r.boolean("per_site").value_or(false)) item.quantity *= site_count;
    r.finish();
    if (item.label.empty()) invalid(r.field("label"), "required");
    require_non_negative(item.unit_cost, r.field("unit_cost"));
    if (item.quantity < 0) invalid(r.field("quantity"), "must be >= 0");
    items.push_back(std::move(item));
  }
  return items;
}

YearDemand read_year(const json& node, const std::string& where) {
  if (!node.is_object()) invalid(where, "expected an object of offer id -> link count");
  YearDemand year;
  for (const auto& [id, count] : node.items()) {
    if (!count.is_number_integer() || count.get<std::int64_t>() < 0) {
      invalid(where + "." + id, "link count must be a non-negative integer");
    }
    year[id] = count.get<std::int64_t>();
  }
  return year;
}

DemandSchedule read_demand(const json& node, const std::string& where) {
  if (node.is_array()) {
    DemandSchedule schedule;
    for (std::size_t i = 0; i < node.size(); ++i) {
      schedule.push_back(read_year(node[i], where + "[" + std::to_string(i) + "]"));
    }
    return schedule;
  }
  ObjectReader r(node, where);
  const json* anchors = r.get("anchors");
  r.finish();
  if (!anchors || !anchors->is_object()) invalid(where, "expected a list of years or {\"anchors\": {...}}");
  std::map<std::int64_t, YearDemand> parsed;
  for (const auto& [key, value] : anchors->items()) {
    std::int64_t year = 0;
    if (!parse_scaled(key, 0, year) || year < 0) invalid(where + ".anchors", "'" + key + "' is not a year index");
    parsed[year] = read_year(value, where + ".anchors." + key);
  }
  return interpolate_demand(parsed);
}

std::map<std::string, Availability> read_components(const json& node, const std::string& where) {
  if (!node.is_object()) invalid(where, "expected an object of label -> availability");
  std::map<std::string, Availability> out;
  for (const auto& [label, value] : node.items()) {
    out[label] = ObjectReader::read_availability(value, where + "." + label);
  }
  return out;
}

SatelliteArch read_satellite(ObjectReader& r, const ScenarioParams& params) {
  SatelliteArch a;
  a.cost_catalog = defaults::satellite_cost_catalog(params.site_count);
  if (auto v = r.decimal("spectral_efficiency_bps_per_hz")) a.spectral_efficiency = *v;
  if (auto v = r.bandwidth("transponder_bandwidth")) a.transponder_bandwidth = *v;
  if (auto v = r.availability("link_availability")) a.link_availability = *v;
  if (const json* c = r.get("cost_catalog")) a.cost_catalog = read_cost_catalog(*c, r.field("cost_catalog"), params.site_count);
  if (auto v = r.money("annual_lease_per_mhz")) a.annual_lease_per_mhz = *v;
  if (a.spectral_efficiency.raw() <= 0) invalid(r.field("spectral_efficiency_bps_per_hz"), "must be > 0");
  if (a.transponder_bandwidth.khz() <= 0) invalid(r.field("transponder_bandwidth"), "must be > 0");
  require_non_negative(a.annual_lease_per_mhz, r.field("annual_lease_per_mhz"));
  return a;
}

HapDirectArch read_hap_direct(ObjectReader& r, const std::vector<PlatformSpec>& platforms) {
  HapDirectArch a;
  const auto platform = r.string("platform");
  if (!platform) invalid(r.field("platform"), "required");
  a.platform = lookup_platform(platforms, *platform, r.field("platform"));
  const auto availability = r.availability("fronthaul_availability");
  if (!availability) invalid(r.field("fronthaul_availability"), "required");
  a.fronthaul_availability = *availability;
  a.ground_capex = r.money("ground_capex").value_or(Money{});
  a.ground_opex_annual = r.money("ground_opex_annual").value_or(Money{});
  a.include_development_cost = r.boolean("include_development_cost").value_or(false);
  a.fleet_size = r.integer("fleet_size");
  if (auto v = r.decimal("learning_rate")) a.learning_rate = *v;
  a.require_gateway = r.boolean("require_gateway").value_or(false);

  require_non_negative(a.ground_capex, r.field("ground_capex"));
  require_non_negative(a.ground_opex_annual, r.field("ground_opex_annual"));
  if (a.fleet_size && *a.fleet_size < 1) invalid(r.field("fleet_size"), "must be >= 1");
  if (a.learning_rate.raw() <= 0 || a.learning_rate > Decimal::from_int(1)) {
    invalid(r.field("learning_rate"), "must be in (0, 1]");
  }
  return a;
}

IntegratedArch read_integrated(ObjectReader& r, const std::vector<PlatformSpec>& platforms) {
  IntegratedArch a;
  const auto platform = r.string("platform");
  if (!platform) invalid(r.field("platform"), "required");
  a.platform = lookup_platform(platforms, *platform, r.field("platform"));

  a.offers = defaults::wholesale_offers();
  if (const json* offers = r.get("offers")) {
    if (!offers->is_array() || offers->empty()) invalid(r.field("offers"), "expected a non-empty list");
    a.offers.clear();
    for (std::size_t i = 0; i < offers->size(); ++i) {
      ObjectReader o((*offers)[i], r.field("offers") + "[" + std::to_string(i) + "]");
      WholesaleOffer offer;
      offer.id = o.string("id").value_or("");
      if (auto v = o.rate("link_rate")) offer.link_rate = *v;
      if (auto v = o.string("tier")) offer.tier = parse_enum(*v, kTiers, o.field("tier"));
      offer.monthly_price = o.money("monthly_price").value_or(Money{});
      o.finish();
      if (offer.id.empty()) invalid(o.field("id"), "required");
      if (offer.monthly_price <= Money{}) invalid(o.field("monthly_price"), "must be > 0");
      if (offer.link_rate.kbps() <= 0) invalid(o.field("link_rate"), "must be > 0");
      for (const auto& existing : a.offers) {
        if (existing.id == offer.id) invalid(o.field("id"), "duplicate offer '" + offer.id + "'");
      }
      a.offers.push_back(std::move(offer));
    }
  }
  for (const auto& offer : a.offers) {
    if (offer.link_rate != a.offers.front().link_rate) {
      invalid(r.field("offers"), "all offers must share one link rate");
    }
  }

  a.demand = defaults::wholesale_demand();
  if (const json* demand = r.get("demand")) a.demand = read_demand(*demand, r.field("demand"));
  for (std::size_t y = 0; y < a.demand.size(); ++y) {
    for (const auto& [id, count] : a.demand[y]) {
      const bool known = std::any_of(a.offers.begin(), a.offers.end(), [&](const auto& o) { return o.id == id; });
      if (!known) {
        throw Error(ErrorCode::unknown_reference,
                    r.field("demand") + "[" + std::to_string(y) + "]: offer '" + id + "'");
      }
    }
  }

  if (auto v = r.decimal("contention_ratio")) a.contention_ratio = *v;
  if (auto v = r.rate("cell_rate_at_class")) a.cell_rate_at_class = *v;
  if (auto v = r.money("mno_ground_capex")) a.mno_ground_capex = *v;
  if (auto v = r.integer("fleet_size")) a.fleet_size = *v;
  a.include_development_cost = r.boolean("include_development_cost").value_or(false);
  if (const json* c = r.get("components")) a.components = read_components(*c, r.field("components"));
  if (const json* t = r.get("tier_topologies")) {
    if (!t->is_object()) invalid(r.field("tier_topologies"), "expected an object of tier -> path");
    for (const auto& [tier, path] : t->items()) {
      const std::string where = r.field("tier_topologies") + "." + tier;
      a.tier_topologies[parse_enum(tier, kTiers, where)] = path_model_from_json(path, where);
    }
  }

  if (auto v = r.string("mno_offer")) {
    a.mno_offer = *v;
    const bool known = std::any_of(a.offers.begin(), a.offers.end(), [&](const auto& o) { return o.id == *v; });
    if (!known) throw Error(ErrorCode::unknown_reference, r.field("mno_offer") + ": offer '" + *v + "'");
  } else {
    const auto it = std::find_if(a.offers.begin(), a.offers.end(),
                                 [](const auto& o) { return o.tier == OfferTier::aerial_only; });
    a.mno_offer = it != a.offers.end() ? it->id : a.offers.front().id;
  }

  if (a.contention_ratio < Decimal::from_int(1)) invalid(r.field("contention_ratio"), "must be >= 1");
  if (a.cell_rate_at_class.kbps() <= 0) invalid(r.field("cell_rate_at_class"), "must be > 0");
  if (a.cell_rate_at_class > a.platform.per_cell_clear_air) {
    invalid(r.field("cell_rate_at_class"), "exceeds the platform's clear-air cell capacity");
  }
  require_non_negative(a.mno_ground_capex, r.field("mno_ground_capex"));
  if (a.fleet_size < 1) invalid(r.field("fleet_size"), "must be >= 1");
  return a;
}

NamedArchitecture read_architecture(const json& node, const std::string& where, const ScenarioParams& params,
                                    const std::vector<PlatformSpec>& platforms) {
  ObjectReader r(node, where);
  NamedArchitecture arch;
  arch.id = r.string("id").value_or("");
  if (arch.id.empty()) invalid(r.field("id"), "required");
  arch.label = r.string("label").value_or(arch.id);
  const auto type = r.string("type");
  if (!type) invalid(r.field("type"), "required");
  if (*type == "satellite") {
    arch.config = read_satellite(r, params);
  } else if (*type == "hap_direct") {
    arch.config = read_hap_direct(r, platforms);
  } else if (*type == "integrated") {
    arch.config = read_integrated(r, platforms);
  } else {
    invalid(r.field("type"), "'" + *type + "' is not one of satellite, hap_direct, integrated");
  }
  r.finish();
  return arch;
}

json money_json(Money m) { return static_cast<double>(m.cents()) / 100.0; }
json decimal_json(Decimal d) { return d.to_double(); }
json availability_json(Availability a) { return a.to_double(); }
json rate_json(DataRate r) {
  if (r.kbps() % 1000 == 0) return r.kbps() / 1000;
  return static_cast<double>(r.kbps()) / 1000.0;
}
json area_json(Area a) {
  if (a.hundredths() % 100 == 0) return a.hundredths() / 100;
  return static_cast<double>(a.hundredths()) / 100.0;
}

json platform_to_json(const PlatformSpec& p) {
  json j;
  j["id"] = p.id;
  j["kind"] = to_string(p.kind);
  j["layout_cells"] = p.layout_cells;
  j["redundancy_fraction"] = decimal_json(p.redundancy_fraction);
  j["covered_area_km2"] = area_json(p.covered_area);
  j["per_cell_clear_air_mbps"] = rate_json(p.per_cell_clear_air);
  j["derating"] = json::array();
  for (const auto& [a, c] : p.derating_table) {
    j["derating"].push_back({{"availability", availability_json(a)}, {"fronthaul_mbps", rate_json(c)}});
  }
  if (p.gateway_capacity) j["gateway_capacity_mbps"] = rate_json(*p.gateway_capacity);
  j["development_cost_eur"] = money_json(p.development_cost);
  j["capex_per_unit_eur"] = money_json(p.capex_per_unit);
  j["opex_per_unit_year_eur"] = money_json(p.opex_per_unit_year);
  return j;
}

}  // namespace

PathModel path_model_from_json(const json& node, const std::string& where) {
  ObjectReader r(node, where);
  const json* series = r.get("series");
  const json* parallel = r.get("parallel");
  const auto ref = r.string("ref");
  PathModel out;
  if (series || parallel) {
    if (series && parallel) invalid(where, "a block is either series or parallel");
    const json& list = series ? *series : *parallel;
    const std::string key = series ? "series" : "parallel";
    if (!list.is_array() || list.empty()) invalid(r.field(key), "expected a non-empty list");
    std::vector<PathModel> children;
    for (std::size_t i = 0; i < list.size(); ++i) {
      children.push_back(path_model_from_json(list[i], r.field(key) + "[" + std::to_string(i) + "]"));
    }
    out = series ? PathModel::series(std::move(children)) : PathModel::parallel(std::move(children));
  } else if (ref) {
    out = PathModel::reference(*ref);
  } else {
    const auto label = r.string("label");
    const auto a = r.availability("availability");
    if (!a) invalid(where, "expected series, parallel, ref, or a leaf with availability");
    out = PathModel::leaf(label.value_or(""), *a);
  }
  r.finish();
  return out;
}

json path_model_to_json(const PathModel& model) {
  switch (model.kind()) {
    case PathModel::Kind::leaf:
      return {{"label", model.label()}, {"availability", availability_json(model.availability())}};
    case PathModel::Kind::reference:
      return {{"ref", model.label()}};
    case PathModel::Kind::series:
    case PathModel::Kind::parallel: {
      json children = json::array();
      for (const auto& c : model.children()) children.push_back(path_model_to_json(c));
      return {{model.kind() == PathModel::Kind::series ? "series" : "parallel", children}};
    }
  }
  return {};
}

Scenario validate_scenario(const json& document) {
  ObjectReader root(document, "$");
  Scenario s;
  s.params = read_params(root.get("scenario"));

  if (const json* a = root.get("assessment")) {
    ObjectReader r(*a, "assessment");
    if (auto v = r.integer("horizon_years")) s.settings.horizon_years = *v;
    if (auto v = r.real("discount_rate")) s.settings.discount_rate = *v;
    r.finish();
    if (s.settings.horizon_years < 1) invalid("assessment.horizon_years", "must be >= 1");
    if (!(s.settings.discount_rate > -1.0)) invalid("assessment.discount_rate", "must be > -1");
  }

  s.platforms = defaults::platforms();
  if (const json* list = root.get("platforms")) {
    if (!list->is_array()) invalid("platforms", "expected a list");
    s.platforms.clear();
    for (std::size_t i = 0; i < list->size(); ++i) {
      PlatformSpec p = read_platform((*list)[i], "platforms[" + std::to_string(i) + "]");
      for (const auto& q : s.platforms) {
        if (q.id == p.id) invalid("platforms[" + std::to_string(i) + "].id", "duplicate platform '" + p.id + "'");
      }
      s.platforms.push_back(std::move(p));
    }
  }

  if (const json* list = root.get("architectures")) {
    if (!list->is_array() || list->empty()) invalid("architectures", "expected a non-empty list");
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string where = "architectures[" + std::to_string(i) + "]";
      NamedArchitecture arch = read_architecture((*list)[i], where, s.params, s.platforms);
      for (const auto& other : s.architectures) {
        if (other.id == arch.id) invalid(where + ".id", "duplicate architecture '" + arch.id + "'");
      }
      s.architectures.push_back(std::move(arch));
    }
  } else {
    s.architectures = defaults::architectures(s.params, s.platforms);
  }

  if (const json* paths = root.get("paths")) {
    if (!paths->is_object()) invalid("paths", "expected an object of name -> path");
    for (const auto& [name, node] : paths->items()) s.paths[name] = path_model_from_json(node, "paths." + name);
  }
  root.finish();
  return s;
}

Scenario parse_scenario(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::validation, std::string("malformed scenario document: ") + e.what());
  }
  return validate_scenario(document);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

json scenario_to_json(const Scenario& s) {
  json j;
  auto& p = j["scenario"];
  p["service_area_km2"] = area_json(s.params.service_area);
  p["penetration_per_km2"] = decimal_json(s.params.penetration);
  p["site_count"] = s.params.site_count;
  p["per_site_uplink_mbps"] = rate_json(s.params.per_site_uplink);
  p["per_site_downlink_mbps"] = rate_json(s.params.per_site_downlink);
  p["arpu_monthly_eur"] = money_json(s.params.arpu_monthly);
  p["amortization_months"] = s.params.amortization_months;
  if (s.params.declared_total_demand) p["declared_total_demand_mbps"] = rate_json(*s.params.declared_total_demand);

  j["assessment"] = {{"horizon_years", s.settings.horizon_years}, {"discount_rate", s.settings.discount_rate}};

  j["platforms"] = json::array();
  for (const auto& platform : s.platforms) j["platforms"].push_back(platform_to_json(platform));

  j["architectures"] = json::array();
  for (const auto& arch : s.architectures) {
    json a;
    a["id"] = arch.id;
    a["label"] = arch.label;
    a["type"] = architecture_kind(arch.config);
    if (const auto* sat = std::get_if<SatelliteArch>(&arch.config)) {
      a["spectral_efficiency_bps_per_hz"] = decimal_json(sat->spectral_efficiency);
      a["transponder_bandwidth_khz"] = sat->transponder_bandwidth.khz();
      a["link_availability"] = availability_json(sat->link_availability);
      a["annual_lease_per_mhz_eur"] = money_json(sat->annual_lease_per_mhz);
      a["cost_catalog"] = json::array();
      for (const auto& item : sat->cost_catalog) {
        a["cost_catalog"].push_back({{"label", item.label},
                                     {"phase", to_string(item.phase)},
                                     {"unit_cost_eur", money_json(item.unit_cost)},
                                     {"quantity", item.quantity},
                                     {"site_class", to_string(item.site_class)}});
      }
    } else if (const auto* hap = std::get_if<HapDirectArch>(&arch.config)) {
      a["platform"] = hap->platform.id;
      a["fronthaul_availability"] = availability_json(hap->fronthaul_availability);
      a["ground_capex_eur"] = money_json(hap->ground_capex);
      a["ground_opex_annual_eur"] = money_json(hap->ground_opex_annual);
      a["include_development_cost"] = hap->include_development_cost;
      if (hap->fleet_size) a["fleet_size"] = *hap->fleet_size;
      a["learning_rate"] = decimal_json(hap->learning_rate);
      a["require_gateway"] = hap->require_gateway;
    } else if (const auto* integ = std::get_if<IntegratedArch>(&arch.config)) {
      a["platform"] = integ->platform.id;
      a["offers"] = json::array();
      for (const auto& o : integ->offers) {
        a["offers"].push_back({{"id", o.id},
                               {"tier", to_string(o.tier)},
                               {"link_rate_mbps", rate_json(o.link_rate)},
                               {"monthly_price_eur", money_json(o.monthly_price)}});
      }
      a["demand"] = json::array();
      for (const auto& year : integ->demand) {
        json y = json::object();
        for (const auto& [id, n] : year) y[id] = n;
        a["demand"].push_back(y);
      }
      a["contention_ratio"] = decimal_json(integ->contention_ratio);
      a["cell_rate_at_class_mbps"] = rate_json(integ->cell_rate_at_class);
      a["mno_ground_capex_eur"] = money_json(integ->mno_ground_capex);
      a["mno_offer"] = integ->mno_offer;
      a["fleet_size"] = integ->fleet_size;
      a["include_development_cost"] = integ->include_development_cost;
      if (!integ->components.empty()) {
        json c = json::object();
        for (const auto& [label, av] : integ->components) c[label] = availability_json(av);
        a["components"] = c;
      }
      if (!integ->tier_topologies.empty()) {
        json t = json::object();
        for (const auto& [tier, model] : integ->tier_topologies) t[std::string(to_string(tier))] = path_model_to_json(model);
        a["tier_topologies"] = t;
      }
    }
    j["architectures"].push_back(std::move(a));
  }

  if (!s.paths.empty()) {
    json paths = json::object();
    for (const auto& [name, model] : s.paths) paths[name] = path_model_to_json(model);
    j["paths"] = paths;
  }
  return j;
}

}  // namespace hapecon
