#include <benchmark/benchmark.h>

#include "hapecon/assess.hpp"
#include "hapecon/catalog.hpp"
#include "hapecon/economics.hpp"
#include "hapecon/reliability.hpp"
#include "hapecon/report.hpp"

using namespace hapecon;

static void BM_AssessArchitecture(benchmark::State& state) {
  const Scenario s = defaults::scenario();
  const std::string id = s.architectures[static_cast<std::size_t>(state.range(0))].id;
  for (auto _ : state) benchmark::DoNotOptimize(assess(s, id));
  state.SetLabel(id);
}
BENCHMARK(BM_AssessArchitecture)->DenseRange(0, 5);

static void BM_CompareAll(benchmark::State& state) {
  const Scenario s = defaults::scenario();
  std::vector<std::string> ids;
  for (const auto& a : s.architectures) ids.push_back(a.id);
  for (auto _ : state) benchmark::DoNotOptimize(compare(s, ids, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CompareAll)->Arg(1)->Arg(4)->UseRealTime();

static void BM_MonteCarlo(benchmark::State& state) {
  const auto leaf = [](const char* a) { return PathModel::leaf("c", Availability::parse(a)); };
  const auto model = PathModel::series({leaf("0.99"), PathModel::parallel({leaf("0.999"), leaf("0.999")})});
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_availability(model, state.range(0), 42, static_cast<unsigned>(state.range(1))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Args({100000, 1})->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Irr(benchmark::State& state) {
  CashFlowSeries flows = {{0, Money::from_meur(-54)}};
  for (std::int64_t t = 1; t < state.range(0); ++t) flows.push_back({t, Money::from_meur(5)});
  for (auto _ : state) benchmark::DoNotOptimize(irr(flows));
}
BENCHMARK(BM_Irr)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

static void BM_RenderStructured(benchmark::State& state) {
  const Scenario s = defaults::scenario();
  const auto report = assess(s, "integrated");
  const ReportEnvelope env{};
  for (auto _ : state) benchmark::DoNotOptimize(render(report, OutputFormat::structured, env));
}
BENCHMARK(BM_RenderStructured);

BENCHMARK_MAIN();
