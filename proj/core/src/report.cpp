#include "hapecon/report.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "hapecon/error.hpp"

namespace hapecon {

using nlohmann::json;

namespace {

// Display precision shared by every output format.
std::string meur(Money m) { return m.format(MoneyUnit::meur, 1); }
std::string keur(Money m) { return m.format(MoneyUnit::keur, 1); }
std::string eur(Money m) { return m.format(MoneyUnit::eur, 2); }
std::string mbps(DataRate r) { return r.mbps_string(r.kbps() % 1000 == 0 ? 0 : 3); }

json money_json(Money m, MoneyUnit unit, int digits) {
  return {{"cents", m.cents()}, {"display", m.format(unit, digits)}, {"unit", unit_suffix(unit)}};
}
json meur_json(Money m) { return money_json(m, MoneyUnit::meur, 1); }
json keur_json(Money m) { return money_json(m, MoneyUnit::keur, 1); }
json eur_json(Money m) { return money_json(m, MoneyUnit::eur, 2); }
json rate_json(DataRate r) { return {{"kbps", r.kbps()}, {"display", mbps(r)}, {"unit", "Mb/s"}}; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  return out + "\n";
}

/// First column left-aligned, the rest right-aligned.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == 0) {
        line += fmt::format("{:<{}}", row[i], width[i]);
      } else {
        line += fmt::format("  {:>{}}", row[i], width[i]);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string header(const std::string& title, const ReportEnvelope& env) {
  std::string out = title + "\n";
  out += "tool " + env.tool_version + ", scenario " + env.scenario_digest.substr(0, 16) + "\n";
  if (!env.timestamp.empty()) out += "generated " + env.timestamp + "\n";
  return out + "\n";
}

json envelope_json(const ReportEnvelope& env) {
  json j = {{"tool", "hapecon"}, {"tool_version", env.tool_version}, {"scenario_digest", env.scenario_digest}};
  if (!env.timestamp.empty()) j["generated_at"] = env.timestamp;
  return j;
}

std::string structured(const ReportEnvelope& env, json body) {
  json doc = {{"envelope", envelope_json(env)}, {"body", std::move(body)}};
  return doc.dump(2) + "\n";
}

struct Entry {
  std::string section;
  std::string key;
  std::string value;
};

std::vector<Entry> assessment_entries(const AssessmentReport& r) {
  std::vector<Entry> e;
  auto add = [&](std::string section, std::string key, std::string value) {
    e.push_back({std::move(section), std::move(key), std::move(value)});
  };
  add("architecture", "id", r.architecture_id);
  add("architecture", "label", r.architecture_label);
  add("architecture", "kind", r.kind);
  add("architecture", "feasible", r.feasible ? "yes" : "no");
  add("demand", "Subscribers", std::to_string(r.subscribers));
  add("demand", "Total backhaul demand (Mb/s)", mbps(r.backhaul_demand));

  if (r.spectrum) {
    add("spectrum", "Required space-segment bandwidth (MHz)", r.spectrum->required_bandwidth.mhz_string());
    add("spectrum", "Transponders", std::to_string(r.spectrum->transponder_count));
    add("spectrum", "Transponder bandwidth (MHz)", r.spectrum->transponder_bandwidth.mhz_string());
  }
  if (r.link) {
    add("link", "Link availability", r.link->availability.to_string_exact());
    add("link", "Downtime per year (h)", r.link->downtime_hours_per_year.to_string());
  }
  if (r.fronthaul) {
    add("fronthaul", "Available cells", std::to_string(r.fronthaul->available_cells));
    add("fronthaul", "Clear-air fronthaul per platform (Mb/s)", mbps(r.fronthaul->clear_air));
    add("fronthaul", "Fronthaul availability", r.fronthaul->availability.to_string_exact());
    add("fronthaul", "Derated fronthaul per platform (Mb/s)", mbps(r.fronthaul->derated));
  }
  if (r.feasibility) {
    const auto& f = *r.feasibility;
    add("feasibility", "Fleet size", std::to_string(f.fleet_size));
    add("feasibility", "Platforms required", std::to_string(f.platforms_required));
    add("feasibility", "Coverage", f.coverage_ok ? "ok" : "insufficient");
    add("feasibility", "Fronthaul", f.fronthaul_ok ? "ok" : "insufficient");
    add("feasibility", "Gateway", !f.gateway_ok ? "unknown" : (*f.gateway_ok ? "ok" : "insufficient"));
    add("feasibility", "Binding constraint", std::string(to_string(f.binding_constraint)));
  }
  if (r.wholesale) {
    add("wholesale", "Cells offering links", std::to_string(r.wholesale->cells));
    add("wholesale", "Sellable links", std::to_string(r.wholesale->sellable_links));
    for (const auto& [offer, a] : r.wholesale->delivered_availability) {
      add("wholesale", "Delivered availability '" + offer + "'", a.to_string_exact());
    }
  }

  if (r.kind == "satellite" && r.subscribers > 0) {
    const auto cls = [&](SiteClass c) {
      const auto it = r.costs.by_site_class.find(c);
      return it == r.costs.by_site_class.end() ? PhaseTotals{} : it->second;
    };
    const std::int64_t sites = std::max<std::int64_t>(
        1, [&] {
          for (const auto& item : r.cost_items) {
            if (item.site_class == SiteClass::cell_site && item.quantity > 0) return item.quantity;
          }
          return std::int64_t{1};
        }());
    add("costs", "CAPEX per cell site (kEUR)", keur(cls(SiteClass::cell_site).capex.divided_by(sites)));
    add("costs", "CAPEX for the aggregation site (kEUR)", keur(cls(SiteClass::aggregation_site).capex));
    add("costs", "OPEX per cell site incl. aggregation share (kEUR/yr)",
        keur(r.costs.opex_annual_total.divided_by(sites)));
  }
  add("costs", "Total CAPEX (MEUR)", meur(r.costs.capex_total));
  add("costs", "Total OPEX (MEUR/yr)", meur(r.costs.opex_annual_total));
  add("costs", "Per-subscriber monthly cost (EUR)", eur(r.per_subscriber_monthly));
  add("costs", "ARPU (EUR)", eur(r.arpu_monthly));
  add("costs", "Above ARPU", r.above_arpu ? "yes" : "no");

  add("cash_flows", "Party", r.cash_flow_party);
  add("cash_flows", "Discount rate", fmt::format("{:.4f}", r.discount_rate));
  add("cash_flows", "NPV (MEUR)", meur(r.npv));
  add("cash_flows", "IRR", r.irr ? fmt::format("{:.4f}", r.irr->rate) : "n/a");
  for (const auto& note : r.notes) add("notes", "note", note);
  return e;
}

json site_class_json(const CostRollup& c) {
  json j = json::object();
  for (const auto& [cls, totals] : c.by_site_class) {
    j[std::string(to_string(cls))] = {{"capex", meur_json(totals.capex)}, {"opex_annual", meur_json(totals.opex_annual)}};
  }
  return j;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::table;
  if (text == "structured" || text == "json") return OutputFormat::structured;
  if (text == "csv") return OutputFormat::csv;
  throw Error(ErrorCode::validation, "--format: '" + std::string(text) + "' is not one of table, structured, csv");
}

std::string scenario_digest(const json& document) {
  const std::string canonical = document.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::io, "SHA-256 digest failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

ComparisonTable compare(const Scenario& scenario, const std::vector<std::string>& architecture_ids,
                        unsigned workers) {
  ComparisonTable table;
  table.arpu_monthly = scenario.params.arpu_monthly;
  table.rows.resize(architecture_ids.size());
  auto evaluate = [&](std::size_t i) {
    ComparisonRow& row = table.rows[i];
    row.architecture_id = architecture_ids[i];
    try {
      const AssessmentReport r = assess(scenario, architecture_ids[i]);
      row.label = r.architecture_label;
      row.capex_total = r.costs.capex_total;
      row.opex_annual = r.costs.opex_annual_total;
      row.per_subscriber_monthly = r.per_subscriber_monthly;
      row.above_arpu = r.above_arpu;
      row.feasible = r.feasible;
      std::string notes;
      for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
      row.notes = notes;
    } catch (const Error& e) {
      row.label = row.architecture_id;
      row.feasible = false;
      row.notes = e.what();
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(architecture_ids.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < architecture_ids.size(); ++i) evaluate(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < architecture_ids.size(); i += workers) evaluate(i);
      });
    }
  }
  return table;
}

std::vector<PlatformSummary> platform_summaries(const Scenario& scenario, Decimal contention) {
  std::vector<PlatformSummary> out;
  for (const auto& p : scenario.platforms) {
    PlatformSummary s;
    s.id = p.id;
    s.kind = p.kind;
    s.layout_cells = p.layout_cells;
    s.available_cells = available_cells(p.layout_cells, p.redundancy_fraction);
    s.covered_area = p.covered_area;
    s.clear_air = clear_air_fronthaul(s.available_cells, p.per_cell_clear_air);
    s.density_per_km2 = throughput_density(s.clear_air, p.covered_area, contention);
    s.derating = p.derating_table;
    s.gateway_capacity = p.gateway_capacity;
    s.development_cost = p.development_cost;
    s.capex_per_unit = p.capex_per_unit;
    s.opex_per_unit_year = p.opex_per_unit_year;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<AvailabilityRow> availability_study(const Scenario& scenario,
                                                const std::optional<std::string>& architecture_id,
                                                std::int64_t trials, std::uint64_t seed) {
  std::vector<std::pair<std::string, PathModel>> paths;
  if (!architecture_id) {
    for (const auto& [name, model] : scenario.paths) paths.emplace_back(name, model);
  }
  for (const auto& arch : scenario.architectures) {
    if (architecture_id && arch.id != *architecture_id) continue;
    if (const auto* sat = std::get_if<SatelliteArch>(&arch.config)) {
      paths.emplace_back(arch.id + "/link", PathModel::leaf("link", sat->link_availability));
    } else if (const auto* hap = std::get_if<HapDirectArch>(&arch.config)) {
      paths.emplace_back(arch.id + "/fronthaul", PathModel::leaf("fronthaul", hap->fronthaul_availability));
    } else if (const auto* integ = std::get_if<IntegratedArch>(&arch.config)) {
      if (integ->components.empty()) continue;
      for (const auto& offer : integ->offers) {
        const auto it = integ->tier_topologies.find(offer.tier);
        const PathModel topology = it != integ->tier_topologies.end() ? it->second : tier_topology(offer.tier);
        paths.emplace_back(arch.id + "/" + offer.id, bind(topology, integ->components));
      }
    }
  }
  if (architecture_id) (void)scenario.architecture(*architecture_id);

  std::vector<AvailabilityRow> rows;
  for (const auto& [name, model] : paths) {
    AvailabilityRow row;
    row.name = name;
    row.analytic = path_availability(model);
    row.downtime_hours = downtime_per_year(row.analytic);
    row.simulated = simulate_availability(model, trials, seed);
    rows.push_back(std::move(row));
  }
  return rows;
}

ForecastReport forecast_report(const Scenario& scenario, const std::optional<std::string>& architecture_id,
                               std::int64_t years) {
  const NamedArchitecture* arch = nullptr;
  if (architecture_id) {
    arch = &scenario.architecture(*architecture_id);
    if (!std::holds_alternative<IntegratedArch>(arch->config)) {
      throw Error(ErrorCode::validation, "architecture '" + arch->id + "' is not an integrated architecture");
    }
  } else {
    for (const auto& a : scenario.architectures) {
      if (std::holds_alternative<IntegratedArch>(a.config)) {
        arch = &a;
        break;
      }
    }
    if (!arch) throw Error(ErrorCode::missing_parameter, "scenario has no integrated architecture");
  }
  const auto& integ = std::get<IntegratedArch>(arch->config);
  if (integ.offers.empty()) throw Error(ErrorCode::validation, "integrated architecture has no offers");

  ForecastReport out;
  out.architecture_id = arch->id;
  for (const auto& o : integ.offers) out.offer_ids.push_back(o.id);
  const std::int64_t cells =
      available_cells(integ.platform.layout_cells, integ.platform.redundancy_fraction) * integ.fleet_size;
  out.sellable_links = sellable_links(cells, integ.cell_rate_at_class, integ.contention_ratio,
                                      integ.offers.front().link_rate);
  out.rows = forecast(integ.demand, integ.offers, out.sellable_links, years);
  return out;
}

json to_json(const FeasibilityReport& f) {
  json j;
  j["coverage_ok"] = f.coverage_ok;
  j["fronthaul_ok"] = f.fronthaul_ok;
  j["gateway_ok"] = f.gateway_ok ? json(*f.gateway_ok) : json("unknown");
  j["fleet_size"] = f.fleet_size;
  j["platforms_required"] = f.platforms_required;
  j["binding_constraint"] = to_string(f.binding_constraint);
  j["fronthaul_capacity_per_platform"] = rate_json(f.fronthaul_capacity);
  j["feasible"] = f.feasible();
  return j;
}

json to_json(const AssessmentReport& r) {
  json j;
  j["architecture"] = {{"id", r.architecture_id}, {"label", r.architecture_label}, {"kind", r.kind}};
  j["feasible"] = r.feasible;
  j["subscribers"] = r.subscribers;
  j["backhaul_demand"] = rate_json(r.backhaul_demand);
  if (r.spectrum) {
    j["spectrum"] = {
        {"required_bandwidth", {{"khz", r.spectrum->required_bandwidth.khz()},
                                {"display", r.spectrum->required_bandwidth.mhz_string()},
                                {"unit", "MHz"}}},
        {"transponder_count", r.spectrum->transponder_count},
        {"transponder_bandwidth", {{"khz", r.spectrum->transponder_bandwidth.khz()},
                                   {"display", r.spectrum->transponder_bandwidth.mhz_string()},
                                   {"unit", "MHz"}}}};
  }
  if (r.link) {
    j["link"] = {{"availability", r.link->availability.to_string_exact()},
                 {"downtime_hours_per_year", r.link->downtime_hours_per_year.to_string()}};
  }
  if (r.fronthaul) {
    j["fronthaul"] = {{"available_cells", r.fronthaul->available_cells},
                      {"clear_air", rate_json(r.fronthaul->clear_air)},
                      {"availability", r.fronthaul->availability.to_string_exact()},
                      {"derated", rate_json(r.fronthaul->derated)}};
  }
  if (r.feasibility) j["feasibility"] = to_json(*r.feasibility);
  if (r.wholesale) {
    json w;
    w["cells"] = r.wholesale->cells;
    w["sellable_links"] = r.wholesale->sellable_links;
    w["rows"] = json::array();
    for (const auto& row : r.wholesale->rows) {
      w["rows"].push_back({{"year", row.year},
                           {"links_by_offer", row.links_by_offer},
                           {"total_links", row.total_links},
                           {"utilization_percent", row.utilization_percent.to_string()},
                           {"income_annual", meur_json(row.income_annual)}});
    }
    json avail = json::object();
    for (const auto& [offer, a] : r.wholesale->delivered_availability) avail[offer] = a.to_string_exact();
    w["delivered_availability"] = avail;
    j["wholesale"] = w;
  }
  json items = json::array();
  for (const auto& item : r.cost_items) {
    items.push_back({{"label", item.label},
                     {"phase", to_string(item.phase)},
                     {"site_class", to_string(item.site_class)},
                     {"unit_cost", keur_json(item.unit_cost)},
                     {"quantity", item.quantity},
                     {"extended", meur_json(item.extended())}});
  }
  j["costs"] = {{"capex_total", meur_json(r.costs.capex_total)},
                {"opex_annual_total", meur_json(r.costs.opex_annual_total)},
                {"by_site_class", site_class_json(r.costs)},
                {"items", items},
                {"per_subscriber_monthly", eur_json(r.per_subscriber_monthly)},
                {"arpu_monthly", eur_json(r.arpu_monthly)},
                {"above_arpu", r.above_arpu}};
  json flows = json::array();
  for (const auto& f : r.cash_flows) flows.push_back({{"period", f.period}, {"amount", meur_json(f.amount)}});
  j["cash_flows"] = {{"party", r.cash_flow_party},
                     {"discount_rate", r.discount_rate},
                     {"flows", flows},
                     {"npv", meur_json(r.npv)},
                     {"irr", r.irr ? json(r.irr->rate) : json(nullptr)},
                     {"irr_multiple_roots", r.irr ? r.irr->multiple_roots : false}};
  j["notes"] = r.notes;
  return j;
}

std::string render(const AssessmentReport& report, OutputFormat format, const ReportEnvelope& envelope) {
  switch (format) {
    case OutputFormat::structured:
      return structured(envelope, to_json(report));
    case OutputFormat::csv: {
      std::string out = csv_line({"section", "key", "value"});
      for (const auto& e : assessment_entries(report)) out += csv_line({e.section, e.key, e.value});
      for (const auto& item : report.cost_items) {
        out += csv_line({"cost_item", item.label,
                         std::string(to_string(item.phase)) + " " + std::to_string(item.quantity) + " x " +
                             keur(item.unit_cost) + " kEUR"});
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = header("Assessment: " + report.architecture_label + " [" + report.architecture_id + "]", envelope);
      std::string section;
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : assessment_entries(report)) {
        if (e.section == "architecture") continue;
        if (e.section != section) {
          if (!rows.empty()) out += grid(rows) + "\n";
          rows.clear();
          section = e.section;
          out += "[" + section + "]\n";
        }
        rows.push_back({"  " + e.key, e.value});
      }
      if (!rows.empty()) out += grid(rows) + "\n";
      rows = {{"  item", "phase", "qty", "unit (kEUR)", "total (MEUR)"}};
      for (const auto& item : report.cost_items) {
        rows.push_back({"  " + item.label, std::string(to_string(item.phase)), std::to_string(item.quantity),
                        keur(item.unit_cost), meur(item.extended())});
      }
      out += "[cost items]\n" + grid(rows);
      if (report.wholesale) {
        out += "\n[forecast]\n";
        rows = {{"  year", "links", "capacity (%)", "income (MEUR)"}};
        for (const auto& row : report.wholesale->rows) {
          rows.push_back({"  " + std::to_string(row.year), std::to_string(row.total_links),
                          row.utilization_percent.to_string(), meur(row.income_annual)});
        }
        out += grid(rows);
      }
      return out;
    }
  }
  return {};
}

std::string render(const ComparisonTable& table, OutputFormat format, const ReportEnvelope& envelope) {
  switch (format) {
    case OutputFormat::structured: {
      json rows = json::array();
      for (const auto& r : table.rows) {
        rows.push_back({{"architecture", r.architecture_id},
                        {"label", r.label},
                        {"capex_total", meur_json(r.capex_total)},
                        {"opex_annual", meur_json(r.opex_annual)},
                        {"per_subscriber_monthly", eur_json(r.per_subscriber_monthly)},
                        {"above_arpu", r.above_arpu},
                        {"feasible", r.feasible},
                        {"notes", r.notes}});
      }
      return structured(envelope, {{"arpu_monthly", eur_json(table.arpu_monthly)}, {"rows", rows}});
    }
    case OutputFormat::csv: {
      std::string out = csv_line({"architecture", "label", "capex_total_cents", "capex_total_meur",
                                  "opex_annual_cents", "opex_annual_meur", "per_subscriber_monthly_cents",
                                  "per_subscriber_monthly_eur", "above_arpu", "feasible", "notes"});
      for (const auto& r : table.rows) {
        out += csv_line({r.architecture_id, r.label, std::to_string(r.capex_total.cents()), meur(r.capex_total),
                         std::to_string(r.opex_annual.cents()), meur(r.opex_annual),
                         std::to_string(r.per_subscriber_monthly.cents()), eur(r.per_subscriber_monthly),
                         r.above_arpu ? "true" : "false", r.feasible ? "true" : "false", r.notes});
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = header("Architecture comparison (ARPU " + eur(table.arpu_monthly) + " EUR)", envelope);
      std::vector<std::vector<std::string>> rows = {
          {"architecture", "CAPEX (MEUR)", "OPEX (MEUR/yr)", "per sub (EUR/month)", "feasible"}};
      std::string notes;
      for (const auto& r : table.rows) {
        rows.push_back({r.architecture_id, meur(r.capex_total), meur(r.opex_annual),
                        eur(r.per_subscriber_monthly) + (r.above_arpu ? " *" : "  "), r.feasible ? "yes" : "no"});
        if (!r.notes.empty()) notes += "  " + r.architecture_id + ": " + r.notes + "\n";
      }
      out += grid(rows);
      out += "\n* above ARPU\n";
      if (!notes.empty()) out += "\nnotes:\n" + notes;
      return out;
    }
  }
  return {};
}

std::string render(const ForecastReport& f, OutputFormat format, const ReportEnvelope& envelope) {
  auto count = [](const YearDemand& d, const std::string& id) {
    const auto it = d.find(id);
    return it == d.end() ? std::int64_t{0} : it->second;
  };
  switch (format) {
    case OutputFormat::structured: {
      json rows = json::array();
      for (const auto& row : f.rows) {
        rows.push_back({{"year", row.year},
                        {"links_by_offer", row.links_by_offer},
                        {"total_links", row.total_links},
                        {"utilization_percent", row.utilization_percent.to_string()},
                        {"income_annual", meur_json(row.income_annual)}});
      }
      return structured(envelope, {{"architecture", f.architecture_id},
                                   {"sellable_links", f.sellable_links},
                                   {"offers", f.offer_ids},
                                   {"rows", rows}});
    }
    case OutputFormat::csv: {
      std::vector<std::string> head = {"year"};
      for (const auto& id : f.offer_ids) head.push_back(id);
      for (const char* c : {"total_links", "sellable_links", "utilization_percent", "income_cents", "income_meur"}) {
        head.emplace_back(c);
      }
      std::string out = csv_line(head);
      for (const auto& row : f.rows) {
        std::vector<std::string> cells = {std::to_string(row.year)};
        for (const auto& id : f.offer_ids) cells.push_back(std::to_string(count(row.links_by_offer, id)));
        cells.push_back(std::to_string(row.total_links));
        cells.push_back(std::to_string(f.sellable_links));
        cells.push_back(row.utilization_percent.to_string());
        cells.push_back(std::to_string(row.income_annual.cents()));
        cells.push_back(meur(row.income_annual));
        out += csv_line(cells);
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = header("Demand and income forecast [" + f.architecture_id + "], " +
                                   std::to_string(f.sellable_links) + " sellable links",
                               envelope);
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> years = {"Year"};
      for (const auto& row : f.rows) years.push_back(std::to_string(row.year));
      rows.push_back(years);
      for (const auto& id : f.offer_ids) {
        std::vector<std::string> line = {id};
        for (const auto& row : f.rows) line.push_back(std::to_string(count(row.links_by_offer, id)));
        rows.push_back(line);
      }
      std::vector<std::string> total = {"Total links"}, cap = {"Platform capacity (%)"}, inc = {"Income ex VAT (MEUR)"};
      for (const auto& row : f.rows) {
        total.push_back(std::to_string(row.total_links));
        cap.push_back(row.utilization_percent.to_string());
        inc.push_back(meur(row.income_annual));
      }
      rows.push_back(total);
      rows.push_back(cap);
      rows.push_back(inc);
      return out + grid(rows);
    }
  }
  return {};
}

std::string render(const std::vector<PlatformSummary>& platforms, OutputFormat format, const ReportEnvelope& envelope) {
  auto gateway = [](const PlatformSummary& p) { return p.gateway_capacity ? mbps(*p.gateway_capacity) : std::string("-"); };
  switch (format) {
    case OutputFormat::structured: {
      json list = json::array();
      for (const auto& p : platforms) {
        json derating = json::array();
        for (const auto& [a, c] : p.derating) derating.push_back({{"availability", a.to_string_exact()}, {"fronthaul", rate_json(c)}});
        list.push_back({{"id", p.id},
                        {"kind", to_string(p.kind)},
                        {"layout_cells", p.layout_cells},
                        {"available_cells", p.available_cells},
                        {"covered_area_km2", p.covered_area.km2_string()},
                        {"clear_air_fronthaul", rate_json(p.clear_air)},
                        {"throughput_density_mbps_per_km2", p.density_per_km2.to_string()},
                        {"derating", derating},
                        {"gateway_capacity", p.gateway_capacity ? rate_json(*p.gateway_capacity) : json(nullptr)},
                        {"development_cost", meur_json(p.development_cost)},
                        {"capex_per_unit", meur_json(p.capex_per_unit)},
                        {"opex_per_unit_year", meur_json(p.opex_per_unit_year)}});
      }
      return structured(envelope, {{"platforms", list}});
    }
    case OutputFormat::csv: {
      std::string out = csv_line({"id", "kind", "layout_cells", "available_cells", "covered_area_km2",
                                  "clear_air_mbps", "density_mbps_per_km2", "gateway_mbps", "development_meur",
                                  "capex_meur", "opex_meur"});
      for (const auto& p : platforms) {
        out += csv_line({p.id, std::string(to_string(p.kind)), std::to_string(p.layout_cells),
                         std::to_string(p.available_cells), p.covered_area.km2_string(), mbps(p.clear_air),
                         p.density_per_km2.to_string(), gateway(p), meur(p.development_cost), meur(p.capex_per_unit),
                         meur(p.opex_per_unit_year)});
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = header("HAP operating and cost parameters", envelope);
      std::vector<std::vector<std::string>> rows;
      auto row = [&](std::string name, auto&& value) {
        std::vector<std::string> line = {std::move(name)};
        for (const auto& p : platforms) line.push_back(value(p));
        rows.push_back(std::move(line));
      };
      row("", [](const PlatformSummary& p) { return p.id; });
      row("Layout cells", [](const PlatformSummary& p) { return std::to_string(p.layout_cells); });
      row("Available cells", [](const PlatformSummary& p) { return std::to_string(p.available_cells); });
      row("Covered area (km2)", [](const PlatformSummary& p) { return p.covered_area.km2_string(0); });
      row("Total fronthaul in clear air (Mb/s)", [](const PlatformSummary& p) { return mbps(p.clear_air); });
      row("Average throughput per km2 (Mb/s/km2)", [](const PlatformSummary& p) { return p.density_per_km2.to_string(); });
      std::set<Availability> anchors;
      for (const auto& p : platforms) {
        for (const auto& [a, c] : p.derating) anchors.insert(a);
      }
      for (const auto& a : anchors) {
        row("Fronthaul at availability " + a.to_string_exact() + " (Mb/s)", [&](const PlatformSummary& p) {
          const auto it = p.derating.find(a);
          return it == p.derating.end() ? std::string("-") : mbps(it->second);
        });
      }
      row("Gateway capacity (Mb/s)", gateway);
      row("Development cost (MEUR)", [](const PlatformSummary& p) { return meur(p.development_cost); });
      row("CAPEX per HAP (MEUR)", [](const PlatformSummary& p) { return meur(p.capex_per_unit); });
      row("OPEX per HAP (MEUR/yr)", [](const PlatformSummary& p) { return meur(p.opex_per_unit_year); });
      return out + grid(rows);
    }
  }
  return {};
}

std::string render(const std::vector<AvailabilityRow>& rows, OutputFormat format, const ReportEnvelope& envelope) {
  switch (format) {
    case OutputFormat::structured: {
      json list = json::array();
      for (const auto& r : rows) {
        list.push_back({{"path", r.name},
                        {"analytic", r.analytic.to_string_exact()},
                        {"downtime_hours_per_year", r.downtime_hours.to_string()},
                        {"simulated", r.simulated.availability},
                        {"half_width_95", r.simulated.half_width},
                        {"trials", r.simulated.trials},
                        {"successes", r.simulated.successes}});
      }
      return structured(envelope, {{"paths", list}});
    }
    case OutputFormat::csv: {
      std::string out = csv_line({"path", "analytic", "downtime_hours_per_year", "simulated", "half_width_95",
                                  "trials", "successes"});
      for (const auto& r : rows) {
        out += csv_line({r.name, r.analytic.to_string_exact(), r.downtime_hours.to_string(),
                         fmt::format("{:.6f}", r.simulated.availability), fmt::format("{:.6f}", r.simulated.half_width),
                         std::to_string(r.simulated.trials), std::to_string(r.simulated.successes)});
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = header("Path availability", envelope);
      std::vector<std::vector<std::string>> grid_rows = {
          {"path", "analytic", "downtime (h/yr)", "simulated", "95% half-width", "trials"}};
      for (const auto& r : rows) {
        grid_rows.push_back({r.name, r.analytic.to_string_exact(), r.downtime_hours.to_string(),
                             fmt::format("{:.6f}", r.simulated.availability),
                             fmt::format("{:.6f}", r.simulated.half_width), std::to_string(r.simulated.trials)});
      }
      return out + grid(grid_rows);
    }
  }
  return {};
}

}  // namespace hapecon
