#include "hapecon/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef HAPECON_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "hapecon/catalog.hpp"
#include "hapecon/error.hpp"
#include "hapecon/report.hpp"
#include "hapecon/scenario_io.hpp"

namespace hapecon::cli {
namespace {

struct Options {
  std::string scenario_path;
  std::vector<std::string> architectures;
  std::int64_t years = 10;
  std::string format = "table";
  std::string out_path;
  std::uint64_t seed = 1;
  std::int64_t trials = 100000;
  unsigned jobs = 1;
  bool no_timestamp = false;
};

struct Loaded {
  Scenario scenario;
  std::string digest;
};

Loaded load(const Options& o) {
  if (o.scenario_path.empty()) {
    Scenario s = defaults::scenario();
    return {s, scenario_digest(scenario_to_json(s))};
  }
  std::ifstream in(o.scenario_path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read scenario file '" + o.scenario_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::validation, std::string("scenario is not well-formed: ") + e.what());
  }
  return {validate_scenario(doc), scenario_digest(doc)};
}

ReportEnvelope envelope(const Options& o, const Loaded& l, OutputFormat format) {
  ReportEnvelope env;
  env.scenario_digest = l.digest;
  if (format == OutputFormat::structured && !o.no_timestamp) {
    env.timestamp = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(
                                                            std::chrono::system_clock::now())));
  }
  return env;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) throw Error(ErrorCode::io, "cannot write '" + o.out_path + "'");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::io:
      return io_failure;
    case ErrorCode::capacity_exceeded:
      return infeasible;
    default:
      return invalid_input;
  }
}

int cmd_assess(const Options& o, std::ostream& out) {
  if (o.architectures.size() != 1) throw Error(ErrorCode::validation, "--arch: assess takes exactly one architecture");
  const Loaded l = load(o);
  const OutputFormat format = parse_format(o.format);
  const AssessmentReport report = assess(l.scenario, o.architectures.front());
  emit(o, render(report, format, envelope(o, l, format)), out);
  return report.feasible ? ok : infeasible;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const OutputFormat format = parse_format(o.format);
  std::vector<std::string> ids = o.architectures;
  if (ids.empty()) {
    for (const auto& a : l.scenario.architectures) ids.push_back(a.id);
  }
  if (ids.size() < 2) throw Error(ErrorCode::validation, "--arch: compare needs at least two architectures");
  for (const auto& id : ids) (void)l.scenario.architecture(id);
  const ComparisonTable table = compare(l.scenario, ids, o.jobs);
  emit(o, render(table, format, envelope(o, l, format)), out);
  return ok;
}

std::optional<std::string> single_arch(const Options& o) {
  if (o.architectures.size() > 1) throw Error(ErrorCode::validation, "--arch: at most one architecture");
  if (o.architectures.empty()) return std::nullopt;
  return o.architectures.front();
}

int cmd_forecast(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const OutputFormat format = parse_format(o.format);
  const ForecastReport f = forecast_report(l.scenario, single_arch(o), o.years);
  emit(o, render(f, format, envelope(o, l, format)), out);
  return ok;
}

int cmd_platforms(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const OutputFormat format = parse_format(o.format);
  Decimal contention = Decimal::from_int(4);
  for (const auto& a : l.scenario.architectures) {
    if (const auto* integ = std::get_if<IntegratedArch>(&a.config)) {
      contention = integ->contention_ratio;
      break;
    }
  }
  emit(o, render(platform_summaries(l.scenario, contention), format, envelope(o, l, format)), out);
  return ok;
}

int cmd_availability(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const OutputFormat format = parse_format(o.format);
  if (o.trials <= 0) throw Error(ErrorCode::validation, "--trials must be positive");
  const auto rows = availability_study(l.scenario, single_arch(o), o.trials, o.seed);
  emit(o, render(rows, format, envelope(o, l, format)), out);
  return ok;
}

int cmd_resolve(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  emit(o, scenario_to_json(l.scenario).dump(2) + "\n", out);
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Techno-economic assessment of satellite and HAP backhaul architectures", "hapecon"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--scenario", o.scenario_path, "Scenario file (bundled defaults when omitted)");
    sub->add_option("--format", o.format, "table, structured or csv")
        ->check(CLI::IsMember({"table", "structured", "json", "csv"}));
    sub->add_option("--out", o.out_path, "Write the report here instead of standard output");
    sub->add_flag("--no-timestamp", o.no_timestamp, "Leave the generation time out of structured output");
  };

  auto* assess_cmd = app.add_subcommand("assess", "Assess one architecture");
  common(assess_cmd);
  assess_cmd->add_option("--arch", o.architectures, "Architecture id")->required();

  auto* compare_cmd = app.add_subcommand("compare", "Compare architectures side by side");
  common(compare_cmd);
  compare_cmd->add_option("--arch", o.architectures, "Architecture id (repeatable; all when omitted)");
  compare_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* forecast_cmd = app.add_subcommand("forecast", "Wholesale demand, utilization and income per year");
  common(forecast_cmd);
  forecast_cmd->add_option("--arch", o.architectures, "Integrated architecture id");
  forecast_cmd->add_option("--years", o.years, "Forecast length")->check(CLI::Range(std::int64_t{1}, std::int64_t{1000}));

  auto* platforms_cmd = app.add_subcommand("platforms", "HAP platform capacities and costs");
  common(platforms_cmd);

  auto* availability_cmd = app.add_subcommand("availability", "Analytic and Monte Carlo path availability");
  common(availability_cmd);
  availability_cmd->add_option("--arch", o.architectures, "Restrict to one architecture");
  availability_cmd->add_option("--seed", o.seed, "Monte Carlo seed");
  availability_cmd->add_option("--trials", o.trials, "Monte Carlo trials");

  auto* resolve_cmd = app.add_subcommand("resolve", "Print the scenario with every default filled in");
  resolve_cmd->add_option("--scenario", o.scenario_path, "Scenario file (bundled defaults when omitted)");
  resolve_cmd->add_option("--out", o.out_path, "Write the document here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  try {
    if (assess_cmd->parsed()) return cmd_assess(o, out);
    if (compare_cmd->parsed()) return cmd_compare(o, out);
    if (forecast_cmd->parsed()) return cmd_forecast(o, out);
    if (platforms_cmd->parsed()) return cmd_platforms(o, out);
    if (resolve_cmd->parsed()) return cmd_resolve(o, out);
    return cmd_availability(o, out);
  } catch (const Error& e) {
    err << "hapecon: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "hapecon: " << e.what() << "\n";
    return io_failure;
  }
}

}  // namespace hapecon::cli
