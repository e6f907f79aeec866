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

#include "gladiator/simulator.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "gladiator/parallel.hpp"
#include "gladiator/rng.hpp"

namespace gladiator {
namespace {

// Runs one battle; appends fights to `log` when it is non-null.
Team Play(const Allocation& a, const Allocation& b, const ContestRule& rule,
          EngagementPolicy policy, SplitMix64& gen, std::vector<Fight>* log) {
  const int m = a.size();
  const int n = b.size();
  auto duel = [&](int i, int j) {
    const Team w = gen.bernoulli(contest_prob(rule, a[i], b[j])) ? Team::kA
                                                                 : Team::kB;
    if (log != nullptr) log->push_back({i, j, w});
    return w;
  };

  switch (policy) {
    case EngagementPolicy::kFixedOrder: {
      int i = 0;
      int j = 0;
      while (i < m && j < n) {
        if (duel(i, j) == Team::kA) {
          ++j;
        } else {
          ++i;
        }
      }
      return j == n ? Team::kA : Team::kB;
    }
    case EngagementPolicy::kWinnerToBench: {
      std::deque<int> qa(static_cast<size_t>(m));
      std::deque<int> qb(static_cast<size_t>(n));
      std::iota(qa.begin(), qa.end(), 0);
      std::iota(qb.begin(), qb.end(), 0);
      while (!qa.empty() && !qb.empty()) {
        const int i = qa.front();
        const int j = qb.front();
        qa.pop_front();
        qb.pop_front();
        if (duel(i, j) == Team::kA) {
          qa.push_back(i);
        } else {
          qb.push_back(j);
        }
      }
      return qb.empty() ? Team::kA : Team::kB;
    }
    case EngagementPolicy::kRandomDraw: {
      std::vector<int> la(static_cast<size_t>(m));
      std::vector<int> lb(static_cast<size_t>(n));
      std::iota(la.begin(), la.end(), 0);
      std::iota(lb.begin(), lb.end(), 0);
      while (!la.empty() && !lb.empty()) {
        const auto pa = static_cast<std::ptrdiff_t>(gen.below(la.size()));
        const auto pb = static_cast<std::ptrdiff_t>(gen.below(lb.size()));
        if (duel(la[static_cast<size_t>(pa)], lb[static_cast<size_t>(pb)]) ==
            Team::kA) {
          lb.erase(lb.begin() + pb);
        } else {
          la.erase(la.begin() + pa);
        }
      }
      return lb.empty() ? Team::kA : Team::kB;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown engagement policy");
}

}  // namespace

std::string_view PolicyName(EngagementPolicy policy) {
  switch (policy) {
    case EngagementPolicy::kFixedOrder: return "fixed";
    case EngagementPolicy::kWinnerToBench: return "bench";
    case EngagementPolicy::kRandomDraw: return "random";
  }
  return "?";
}

EngagementPolicy ParsePolicy(std::string_view name) {
  if (name == "fixed") return EngagementPolicy::kFixedOrder;
  if (name == "bench") return EngagementPolicy::kWinnerToBench;
  if (name == "random") return EngagementPolicy::kRandomDraw;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown policy '" + std::string(name) + "' (fixed|bench|random)");
}

BattleLog simulate_battle(const Allocation& a, const Allocation& b,
                          const ContestRule& rule, EngagementPolicy policy,
                          std::uint64_t seed) {
  SplitMix64 gen(seed);
  BattleLog log{{}, Team::kA, seed, policy};
  log.fights.reserve(static_cast<size_t>(a.size() + b.size() - 1));
  log.winner = Play(a, b, rule, policy, gen, &log.fights);
  return log;
}

WinProbability estimate_winprob(const Allocation& a, const Allocation& b,
                                const ContestRule& rule, EngagementPolicy policy,
                                std::int64_t trials, std::uint64_t seed,
                                int workers) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  std::vector<std::int64_t> wins(static_cast<size_t>(std::max(1, workers)), 0);
  parallel_chunks(trials, workers,
                  [&](std::int64_t begin, std::int64_t end, int chunk) {
                    std::int64_t local = 0;
                    for (std::int64_t t = begin; t < end; ++t) {
                      SplitMix64 gen(derive_stream(seed, static_cast<std::uint64_t>(t)));
                      if (Play(a, b, rule, policy, gen, nullptr) == Team::kA) ++local;
                    }
                    wins[static_cast<size_t>(chunk)] = local;
                  });
  const auto total = std::accumulate(wins.begin(), wins.end(), std::int64_t{0});
  const double p = static_cast<double>(total) / static_cast<double>(trials);
  return WinProbability::Estimate(
      p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials)), trials);
}

}  // namespace gladiator
