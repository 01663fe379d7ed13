// Copyright 2026 The bisol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "bisol/census.hpp"
#include "bisol/densities.hpp"
#include "bisol/qp_solver.hpp"

namespace {

using namespace bisol;

void BM_DecideQp(benchmark::State& state) {
  const auto p = static_cast<unsigned long>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto F = qp::random_integer_form(7, i++, 1000);
    if (F == BiForm22<mpz_class>{}) continue;
    benchmark::DoNotOptimize(qp::decide_qp(qp::QpForm::exact(F, p, 8)));
  }
}
BENCHMARK(BM_DecideQp)->Arg(2)->Arg(3)->Arg(5)->Arg(31);

void BM_ElsDecide(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto F = qp::random_integer_form(9, i++, 10);
    try {
      benchmark::DoNotOptimize(qp::els_decide(F));
    } catch (const qp::SolverError&) {
    }
  }
}
BENCHMARK(BM_ElsDecide);

void BM_Census(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census::run_census(q));
}
BENCHMARK(BM_Census)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RhoAssembled(benchmark::State& state) {
  const auto p = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rho_assembled(p));
}
BENCHMARK(BM_RhoAssembled)->Arg(2)->Arg(97);

void BM_McRho(benchmark::State& state) {
  MCOptions o;
  o.samples = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_rho(3, o));
    ++o.seed;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * o.samples));
}
BENCHMARK(BM_McRho)->Unit(benchmark::kMillisecond);

void BM_RealDensity(benchmark::State& state) {
  MCOptions o;
  o.samples = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_real_density(o));
    ++o.seed;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * o.samples));
}
BENCHMARK(BM_RealDensity)->Unit(benchmark::kMillisecond);

void BM_PrimeProduct(benchmark::State& state) {
  const auto pmax = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prime_product(pmax));
}
BENCHMARK(BM_PrimeProduct)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
