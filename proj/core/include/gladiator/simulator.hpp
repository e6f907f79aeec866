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

#ifndef GLADIATOR_SIMULATOR_HPP_
#define GLADIATOR_SIMULATOR_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "gladiator/core.hpp"

namespace gladiator {

// Who enters the arena next. Policies only reorder fighters; strengths never
// change during a battle.
enum class EngagementPolicy {
  // Fixed queues; the winner stays in the arena.
  kFixedOrder,
  // The winner walks to the back of its team's queue.
  kWinnerToBench,
  // Before every fight each coach picks a living gladiator uniformly.
  kRandomDraw,
};

std::string_view PolicyName(EngagementPolicy policy);
EngagementPolicy ParsePolicy(std::string_view name);

struct Fight {
  int a_index;
  int b_index;
  Team winner;

  friend bool operator==(const Fight&, const Fight&) = default;
};

struct BattleLog {
  std::vector<Fight> fights;
  Team winner;
  std::uint64_t seed;
  EngagementPolicy policy;

  friend bool operator==(const BattleLog&, const BattleLog&) = default;
};

// Plays one battle to the end, drawing all randomness from SplitMix64(seed).
// At most m + n - 1 fights.
BattleLog simulate_battle(const Allocation& a, const Allocation& b,
                          const ContestRule& rule, EngagementPolicy policy,
                          std::uint64_t seed);

// Frequency of A-wins over `trials` battles; battle t uses the stream
// derive_stream(seed, t), so the estimate does not depend on `workers`.
WinProbability estimate_winprob(const Allocation& a, const Allocation& b,
                                const ContestRule& rule, EngagementPolicy policy,
                                std::int64_t trials, std::uint64_t seed,
                                int workers = 1);

}  // namespace gladiator

#endif  // GLADIATOR_SIMULATOR_HPP_
