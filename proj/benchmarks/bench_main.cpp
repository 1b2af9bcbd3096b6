// Copyright 2026 The safety_envelope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>

#include "safety_envelope/analysis.hpp"
#include "safety_envelope/dynamic_thresholds.hpp"
#include "safety_envelope/rss_envelope.hpp"
#include "safety_envelope/scenario_io.hpp"
#include "safety_envelope/simulator.hpp"

namespace se = safety_envelope;

namespace
{

void BM_SafeLongitudinalDistance(benchmark::State & state)
{
  const se::AssumptionSet a;
  double v = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::safe_longitudinal_distance({se::Speed(v), se::Speed(20.0), a}));
    v = v < 40.0 ? v + 0.01 : 0.0;
  }
}
BENCHMARK(BM_SafeLongitudinalDistance);

void BM_SafeLateralDistance(benchmark::State & state)
{
  const se::AssumptionSet a;
  double v = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
      se::safe_lateral_distance({se::Speed(v), se::Speed(-0.5), se::Duration(0.5), se::Duration(0.5), a}));
    v = v < 1.5 ? v + 0.001 : 0.0;
  }
}
BENCHMARK(BM_SafeLateralDistance);

void BM_DynamicTtc(benchmark::State & state)
{
  double v = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::dynamic_ttc(se::Speed(v), se::Speed(v), se::Acceleration(6.0)));
    v = v < 40.0 ? v + 0.01 : 0.0;
  }
}
BENCHMARK(BM_DynamicTtc);

void BM_Sweep(benchmark::State & state)
{
  const auto kind = static_cast<se::SweepKind>(state.range(0));
  const auto grid = se::default_grid(kind, se::default_sweep_params(kind));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::sweep(grid, threads).values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.cell_count()));
  state.SetLabel(std::string(se::to_string(kind)));
}
BENCHMARK(BM_Sweep)
  ->ArgsProduct({{static_cast<int>(se::SweepKind::LcpDistance), static_cast<int>(se::SweepKind::CutinTtc)}, {1, 4}})
  ->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State & state, const char * file)
{
  const auto sc = se::load_scenario(std::filesystem::path(SAFETY_ENVELOPE_SCENARIO_DIR) / file);
  for (auto _ : state) {
    benchmark::DoNotOptimize(se::run(sc).trace.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sc.tick_count()));
}
BENCHMARK_CAPTURE(BM_Simulate, sudden_brake_rss, "sudden_brake_rss.json")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Simulate, lcp_urban_block, "lcp_urban_block.json")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
