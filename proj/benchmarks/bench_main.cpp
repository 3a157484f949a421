// Copyright 2026 The cpforce Authors
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

#include <cmath>

#include <benchmark/benchmark.h>

#include "cpforce/cp_solver.hpp"
#include "cpforce/materials.hpp"
#include "cpforce/plate_solver.hpp"
#include "cpforce/reflection.hpp"
#include "cpforce/spectral.hpp"
#include "cpforce/sweep.hpp"

namespace {

using namespace cpforce;

WallModel wall_for(int index) {
  switch (index) {
    case 0: return presets::ideal_metal();
    case 1: return presets::au_plasma();
    case 2: return presets::fe_plasma();
    default: return presets::ferro_dielectric();
  }
}

void BM_Fresnel(benchmark::State& state) {
  const auto ctx = SpectralContext::make(1e-4, 1.0);
  const MediumResponse m = wall_response(presets::au_plasma(), ctx.zeta(10), 10, ctx.omega_c);
  double y = ctx.zeta(10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fresnel(m, y));
    y += 1e-3;
    if (y > 60.0) y = ctx.zeta(10);
  }
}
BENCHMARK(BM_Fresnel);

void BM_ForceTerm(benchmark::State& state) {
  const auto wall = wall_for(static_cast<int>(state.range(0)));
  const auto ctx = SpectralContext::make(1e-4, 1.0);
  const auto atom = presets::hydrogen();
  std::size_t l = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cp_force_term(atom, wall, ctx, l));
    l = l % 5000 + 1;
  }
}
BENCHMARK(BM_ForceTerm)->DenseRange(0, 3);

// One full force evaluation; range(0) selects the wall, range(1) the
// separation in um (the term count scales as 1 / a).
void BM_CpForce(benchmark::State& state) {
  const auto wall = wall_for(static_cast<int>(state.range(0)));
  const double a = static_cast<double>(state.range(1)) * 1e-4;
  const auto atom = presets::hydrogen();
  std::size_t terms = 0;
  for (auto _ : state) {
    const auto r = cp_force(atom, wall, a, 1.0);
    terms = r.report.terms_used;
    benchmark::DoNotOptimize(r.f_total);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_CpForce)->ArgsProduct({{0, 1, 2, 3}, {1, 10}})->Unit(benchmark::kMillisecond);

void BM_CpForceWorkers(benchmark::State& state) {
  SolverOptions opts;
  opts.workers = static_cast<unsigned>(state.range(0));
  const auto atom = presets::hydrogen();
  const auto wall = presets::ferro_dielectric();
  for (auto _ : state) benchmark::DoNotOptimize(cp_force(atom, wall, 1e-4, 1.0, opts).f_total);
}
BENCHMARK(BM_CpForceWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PrimedSum(benchmark::State& state) {
  const double tau = 5.49e-3;
  auto term = [tau](std::size_t l) {
    const double t = tau * static_cast<double>(l);
    return l == 0 ? 0.0 : (6.0 + 6.0 * t + 3.0 * t * t + t * t * t) * std::exp(-t);
  };
  for (auto _ : state) benchmark::DoNotOptimize(primed_sum(term, 1e-12, 1'000'000).first);
}
BENCHMARK(BM_PrimedSum)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.atom = presets::hydrogen();
  spec.wall = presets::fe_plasma();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, workers).size());
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PlateFreeEnergy(benchmark::State& state) {
  const DiluteGasWall gas{presets::hydrogen(), 1e16, {}};
  const auto wall = presets::ferro_dielectric();
  for (auto _ : state) benchmark::DoNotOptimize(plate_free_energy(wall, gas, 1e-4, 1.0).free_energy);
}
BENCHMARK(BM_PlateFreeEnergy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
