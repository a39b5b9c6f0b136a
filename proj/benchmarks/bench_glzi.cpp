// Copyright 2026 The glzi Authors
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

#include "glzi/battery.hpp"
#include "glzi/liouvillian.hpp"
#include "glzi/protocol.hpp"

namespace {

using namespace glzi;

NoiseParams default_noise() { return NoiseParams::from_times(118.0, 157.0, 1e-4); }

void BM_LiouvillianApply(benchmark::State& state) {
  const double nbar = static_cast<double>(state.range(0));
  const int nc = compute_cutoff(Coherent{nbar, 0.0});
  ProtocolParams p;
  p.nbar = nbar;
  const QuantumModel model(p.coupling(), nc, default_noise());
  const Vector x = vectorize(model.initial_state(build_coherent(nbar, 0.0, nc)));
  Vector out(x.size());
  for (auto _ : state) {
    model.liouvillian().apply(0.3, x, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["dim"] = static_cast<double>(x.size());
}
BENCHMARK(BM_LiouvillianApply)->Arg(5)->Arg(15);

void BM_RunQuantum(benchmark::State& state) {
  ProtocolParams p;
  p.nbar = static_cast<double>(state.range(0));
  p.theta_geo = 0.7;
  for (auto _ : state) {
    const RunResult r = run_quantum(p, Coherent{p.nbar, 0.0}, default_noise(), IntegratorConfig{});
    benchmark::DoNotOptimize(r.p_e);
  }
}
BENCHMARK(BM_RunQuantum)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RunClassical(benchmark::State& state) {
  ProtocolParams p;
  p.theta_geo = 0.7;
  for (auto _ : state) {
    const RunResult r = run_classical(p, default_noise(), IntegratorConfig{});
    benchmark::DoNotOptimize(r.p_e);
  }
}
BENCHMARK(BM_RunClassical)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
