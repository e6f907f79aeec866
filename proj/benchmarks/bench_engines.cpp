// Copyright 2026 The Gladiator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "gladiator/equilibrium.hpp"
#include "gladiator/simulator.hpp"
#include "gladiator/special.hpp"
#include "gladiator/winprob.hpp"

namespace gladiator {
namespace {

void BM_DuelDP(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto a = equal_split(size, size, 1.0);
  const auto b = equal_split(size, size, 1.3);
  const auto rule = ContestRule::Ratio();
  for (auto _ : state) {
    benchmark::DoNotOptimize(winprob_duel_dp(a, b, rule).value());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DuelDP)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_GeometricDP(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto a = equal_split(size, size, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(winprob_geometric_dp(a, size, 1.3 / size).value());
  }
}
BENCHMARK(BM_GeometricDP)->RangeMultiplier(4)->Range(4, 1024);

void BM_BetaClosedForm(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(winprob_beta_closed_form(size, size, 1.0, 1.3).value());
  }
}
BENCHMARK(BM_BetaClosedForm)->RangeMultiplier(4)->Range(4, 4096);

void BM_GammaTail(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_tail(r, 1.3 * r));
}
BENCHMARK(BM_GammaTail)->RangeMultiplier(4)->Range(1, 1024);

void BM_SolveEquilibrium(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const GameSpec spec(m, m, 100.0, 130.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_equilibrium(spec).value);
}
BENCHMARK(BM_SolveEquilibrium)->RangeMultiplier(2)->Range(5, 80);

void BM_BestResponseBruteforce(benchmark::State& state) {
  const GameSpec spec(3, 3, 1.0, 1.6);
  const auto b = equal_split(3, 3, 1.6);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_response_bruteforce(spec, b, grid));
  }
}
BENCHMARK(BM_BestResponseBruteforce)->Arg(12)->Arg(24)->Arg(48);

void BM_ExpSumMonteCarlo(benchmark::State& state) {
  const auto a = make_allocation({0.5, 0.5, 1.0});
  const auto b = make_allocation({1.0, 1.0});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(winprob_exp_sum_mc(a, b, 10'000, ++seed).value());
  }
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_ExpSumMonteCarlo);

void BM_SimulatePolicy(benchmark::State& state) {
  const auto policy = static_cast<EngagementPolicy>(state.range(0));
  const auto a = equal_split(5, 5, 1.0);
  const auto b = equal_split(5, 5, 1.2);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_winprob(a, b, ContestRule::Ratio(), policy, 10'000, ++seed).value());
  }
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_SimulatePolicy)->DenseRange(0, 2);

}  // namespace
}  // namespace gladiator

BENCHMARK_MAIN();
