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

#ifndef GLADIATOR_EQUILIBRIUM_HPP_
#define GLADIATOR_EQUILIBRIUM_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gladiator/core.hpp"

namespace gladiator {

// Which closed-form threshold, if any, settles the weaker team's support.
enum class Regime { kFullSpread, kConcentrated, kInterior };

std::string_view RegimeName(Regime regime);

struct EquilibriumSolution {
  GameSpec spec;
  // Team with the smaller total strength (A on ties). It is the only team
  // that may leave gladiators at zero strength.
  Team weaker;
  // Support size of the weaker team's equilibrium allocation.
  int concentration;
  // Number of positive entries in a_star.
  int r_star;
  // Positions of the positive entries of a_star (0-based).
  std::vector<int> support;
  Allocation a_star;
  Allocation b_star;
  // Payoff H = G - 1/2 to team A.
  double value;
  Regime regime;
  // Every support size of the weaker team attaining the optimum exactly,
  // ascending; `concentration` is the first.
  std::vector<int> maximizers;
};

// v(r) = 1/2 - I(r c_b / (r c_b + n c_a), r, n): payoff to the weaker team A
// (c_a <= c_b) when it splits evenly over r gladiators against B's even split.
double concentrated_value(int r, int n, double c_a, double c_b);

// Classifies by c_b <= n/(n-1) c_a (full spread) and c_b >= 3n/(2(n-1)) c_a
// (single gladiator). Requires c_a <= c_b; n = 1 is always full spread.
Regime threshold_regime(const GameSpec& spec);

// Pure equilibrium and value. When c_a > c_b the roles are swapped
// internally; the result is always reported from team A's side.
EquilibriumSolution solve_equilibrium(const GameSpec& spec);

// All distinct placements of the weaker team's support: every equilibrium
// allocation for that team is one of these.
std::vector<Allocation> equilibrium_permutations(
    const EquilibriumSolution& solution);

// Large-n limit: argmax over r in [1, m] of f(r) = P(G_r > r beta),
// G_r ~ Gamma(r, 1), beta = c_b / c_a >= 1. Smallest r on ties.
int asymptotic_r_star(int m, double beta);

inline constexpr std::int64_t kDefaultCompositionCap = 10'000'000;

// Number of ways to write `quanta` as an ordered sum of `parts` nonnegative
// integers; saturates at INT64_MAX.
std::int64_t composition_count(int quanta, int parts);

// Exhaustive best response of team A against `b` over allocations whose
// entries are multiples of c_a / grid_k. Evaluated by duel DP under the ratio
// rule; first in lexicographic order among (near-)ties.
Allocation best_response_bruteforce(const GameSpec& spec, const Allocation& b,
                                    int grid_k,
                                    std::int64_t cap = kDefaultCompositionCap);

enum class SweepParameter { kM, kN, kCA, kCB };

std::string_view SweepParameterName(SweepParameter p);
SweepParameter ParseSweepParameter(std::string_view name);

// One parameter of `base` varied over start, start + step, ..., up to stop
// (inclusive, with a small tolerance for accumulated rounding).
struct SweepDescriptor {
  GameSpec base;
  SweepParameter parameter;
  double start;
  double stop;
  double step;
};

struct ValuePoint {
  double swept;
  GameSpec spec;
  int r_star;
  int concentration;
  double value;
};

std::vector<ValuePoint> value_curve(const SweepDescriptor& sweep);

}  // namespace gladiator

#endif  // GLADIATOR_EQUILIBRIUM_HPP_
