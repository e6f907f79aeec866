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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gladiator/equilibrium.hpp"
#include "gladiator/special.hpp"
#include "gladiator/winprob.hpp"
#include "oracles.hpp"

using namespace gladiator;

namespace {

double Payoff(const Allocation& a, const Allocation& b) {
  return winprob_duel_dp(a, b, ContestRule::Ratio()).value() - 0.5;
}

// Argmax of v(r) by direct duel-DP evaluation of each equal split.
int ArgmaxByDuel(const GameSpec& s) {
  int best_r = 1;
  double best = -1.0;
  for (int r = 1; r <= s.m(); ++r) {
    const double v = Payoff(equal_split(s.m(), r, s.c_a()),
                            equal_split(s.n(), s.n(), s.c_b()));
    if (v > best + 1e-13) {
      best = v;
      best_r = r;
    }
  }
  return best_r;
}

}  // namespace

TEST_CASE("solve_equilibrium examples") {
  {
    const auto sol = solve_equilibrium(GameSpec(2, 2, 100.0, 100.0));
    CHECK(sol.r_star == 2);
    CHECK(std::abs(sol.value) < 1e-15);
  }
  {
    const auto sol = solve_equilibrium(GameSpec(2, 1, 1.0, 1.0));
    CHECK(sol.r_star == 2);
    CHECK(sol.a_star.strengths() == std::vector<double>{0.5, 0.5});
    CHECK(std::abs(sol.value - 1.0 / 18.0) < 1e-15);
    CHECK(sol.regime == Regime::kFullSpread);
    CHECK(sol.weaker == Team::kA);
  }
  {
    const auto sol = solve_equilibrium(GameSpec(40, 20, 100.0, 100.0));
    CHECK(sol.r_star == 40);
    CHECK(sol.regime == Regime::kFullSpread);
  }
  {
    const auto sol = solve_equilibrium(GameSpec(40, 20, 100.0, 200.0));
    CHECK(sol.r_star == 1);
    CHECK(sol.regime == Regime::kConcentrated);
    CHECK(sol.support == std::vector<int>{0});
    CHECK(sol.a_star[0] == 100.0);
    CHECK(sol.b_star.strengths() == std::vector<double>(20, 10.0));
  }
}

TEST_CASE("value matches the duel DP at the reported profile") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (double cb : {1.0, 1.3, 2.0, 0.6}) {
        const auto sol = solve_equilibrium(GameSpec(m, n, 1.0, cb));
        CHECK(std::abs(Payoff(sol.a_star, sol.b_star) - sol.value) < 1e-12);
        CHECK(sol.value >= -0.5);
        CHECK(sol.value <= 0.5);
      }
    }
  }
}

TEST_CASE("stronger team A is handled by swapping roles") {
  const auto direct = solve_equilibrium(GameSpec(20, 40, 200.0, 100.0));
  const auto mirror = solve_equilibrium(GameSpec(40, 20, 100.0, 200.0));
  CHECK(direct.weaker == Team::kB);
  CHECK(direct.value == -mirror.value);
  CHECK(direct.concentration == 1);
  CHECK(direct.r_star == 20);
  CHECK(direct.b_star.support_size() == 1);
  CHECK(direct.b_star[0] == 100.0);
  CHECK(std::abs(Payoff(direct.a_star, direct.b_star) - direct.value) < 1e-12);
}

TEST_CASE("threshold_regime examples") {
  CHECK(threshold_regime(GameSpec(5, 20, 100.0, 103.0)) == Regime::kFullSpread);
  CHECK(threshold_regime(GameSpec(5, 20, 100.0, 160.0)) == Regime::kConcentrated);
  CHECK(threshold_regime(GameSpec(5, 20, 100.0, 130.0)) == Regime::kInterior);
  CHECK(threshold_regime(GameSpec(5, 1, 1.0, 100.0)) == Regime::kFullSpread);
  CHECK_THROWS_AS(threshold_regime(GameSpec(5, 20, 2.0, 1.0)), Error);
}

TEST_CASE("regimes pin the maximizer") {
  int checked = 0;
  for (int m = 1; m <= 50; m += 7) {
    for (int n = 1; n <= 50; n += 3) {
      for (int t = 0; t < 50; ++t) {
        const double cb = 1.0 + 2.0 * t / 49.0;
        const auto sol = solve_equilibrium(GameSpec(m, n, 1.0, cb));
        if (sol.regime == Regime::kFullSpread) {
          CHECK(sol.r_star == m);
          ++checked;
        } else if (sol.regime == Regime::kConcentrated) {
          CHECK(sol.r_star == 1);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("closed-form argmax agrees with duel DP evaluation") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      for (double cb : {1.0, 1.1, 1.25, 1.5, 2.0}) {
        const GameSpec s(m, n, 1.0, cb);
        const auto sol = solve_equilibrium(s);
        if (sol.maximizers.size() == 1) CHECK(sol.r_star == ArgmaxByDuel(s));
      }
    }
  }
}

TEST_CASE("ties are reported as all maximizers") {
  const auto sol = solve_equilibrium(GameSpec(3, 1, 1.0, 1.0));
  CHECK(sol.maximizers.front() == sol.concentration);
  CHECK(std::is_sorted(sol.maximizers.begin(), sol.maximizers.end()));
  // m = 1 has exactly one candidate.
  CHECK(solve_equilibrium(GameSpec(1, 5, 1.0, 3.0)).maximizers ==
        std::vector<int>{1});
}

TEST_CASE("r* is nonincreasing in c_B") {
  for (int m : {5, 20, 40}) {
    for (int n : {2, 10, 20, 40}) {
      int prev = m;
      for (int t = 0; t <= 200; ++t) {
        const auto sol = solve_equilibrium(GameSpec(m, n, 100.0, 100.0 + t));
        CHECK(sol.r_star <= prev);
        prev = sol.r_star;
      }
    }
  }
}

TEST_CASE("value depends only on the budget ratio") {
  for (int m = 1; m <= 10; ++m) {
    for (int n = 1; n <= 10; ++n) {
      const double v = solve_equilibrium(GameSpec(m, n, 1.0, 1.7)).value;
      for (double t : {0.01, 3.0, 250.0}) {
        CHECK(std::abs(solve_equilibrium(GameSpec(m, n, t, 1.7 * t)).value - v) <
              1e-12);
      }
    }
  }
}

TEST_CASE("saddle point against random deviations") {
  std::mt19937_64 rng(123);
  for (const auto& spec : {GameSpec(3, 2, 1.0, 1.0), GameSpec(4, 3, 1.0, 1.5),
                           GameSpec(2, 4, 1.0, 2.0), GameSpec(3, 3, 2.0, 1.0)}) {
    const auto sol = solve_equilibrium(spec);
    const double h = Payoff(sol.a_star, sol.b_star);
    for (int t = 0; t < 200; ++t) {
      const auto a = make_allocation(
          oracle::RandomStrengths(rng, spec.m(), spec.c_a(), true));
      const auto b = make_allocation(
          oracle::RandomStrengths(rng, spec.n(), spec.c_b(), true));
      CHECK(Payoff(a, sol.b_star) <= h + 1e-12);
      CHECK(Payoff(sol.a_star, b) >= h - 1e-12);
    }
  }
}

TEST_CASE("equilibrium_permutations") {
  const auto sol = solve_equilibrium(GameSpec(4, 20, 100.0, 200.0));
  REQUIRE(sol.r_star == 1);
  const auto perms = equilibrium_permutations(sol);
  CHECK(perms.size() == 4);
  for (const auto& a : perms) {
    CHECK(a.support_size() == 1);
    CHECK(std::abs(Payoff(a, sol.b_star) - sol.value) < 1e-12);
  }
  CHECK(equilibrium_permutations(solve_equilibrium(GameSpec(3, 3, 1.0, 1.0))).size() ==
        1);
}

TEST_CASE("asymptotic_r_star") {
  CHECK(asymptotic_r_star(10, 1.5) == 1);
  CHECK(asymptotic_r_star(1, 1.0) == 1);
  CHECK(asymptotic_r_star(1, 4.0) == 1);
  // Full argmax computed directly.
  for (double beta : {1.0, 1.05, 1.1, 1.2, 1.25}) {
    for (int m : {1, 2, 5, 10, 20}) {
      int arg = 1;
      double best = gamma_tail(1, beta);
      for (int r = 2; r <= m; ++r) {
        const double f = gamma_tail(r, r * beta);
        if (f > best) {
          best = f;
          arg = r;
        }
      }
      CHECK(asymptotic_r_star(m, beta) == arg);
    }
  }
  CHECK(asymptotic_r_star(10, 1.0) > 1);
  const double t0 = t0_root();
  for (int i = 1; i <= 100; ++i) {
    const double beta = t0 + 1e-6 + (5.0 - t0 - 1e-6) * i / 100.0;
    CHECK(asymptotic_r_star(20, beta) == 1);
  }
  CHECK_THROWS_AS(asymptotic_r_star(5, 0.9), Error);
}

TEST_CASE("composition_count") {
  CHECK(composition_count(20, 1) == 1);
  CHECK(composition_count(20, 2) == 21);
  CHECK(composition_count(24, 3) == 325);
  CHECK(composition_count(1000, 50) == std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("best_response_bruteforce examples") {
  {
    const auto a = best_response_bruteforce(GameSpec(2, 1, 1.0, 1.0),
                                            make_allocation({1.0}), 20);
    CHECK(a.strengths() == std::vector<double>{0.5, 0.5});
  }
  {
    const auto a = best_response_bruteforce(GameSpec(2, 2, 1.0, 3.0),
                                            make_allocation({1.5, 1.5}), 20);
    CHECK(a.support_size() == 1);
    CHECK(std::max(a[0], a[1]) == 1.0);
  }
  {
    const auto a = best_response_bruteforce(GameSpec(1, 3, 2.5, 1.0),
                                            equal_split(3, 3, 1.0), 7);
    CHECK(a.strengths() == std::vector<double>{2.5});
  }
  CHECK_THROWS_AS(best_response_bruteforce(GameSpec(40, 1, 1.0, 1.0),
                                           make_allocation({1.0}), 40),
                  Error);
  CHECK_THROWS_AS(best_response_bruteforce(GameSpec(2, 2, 1.0, 1.0),
                                           make_allocation({1.0}), 4),
                  Error);
}

TEST_CASE("brute-force best response certifies small equilibria") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (double ratio : {1.0, 1.2, 1.6, 2.0}) {
        const GameSpec spec(m, n, 1.0, ratio);
        const auto sol = solve_equilibrium(spec);
        const auto br = best_response_bruteforce(spec, sol.b_star, 24);
        const double g = Payoff(br, sol.b_star);
        CHECK(std::abs(g - sol.value) <= 2e-3);
        double lo = 1e300;
        double hi = 0.0;
        for (double x : br.strengths()) {
          if (x == 0.0) continue;
          lo = std::min(lo, x);
          hi = std::max(hi, x);
        }
        CHECK(hi - lo <= 1.0 / 24 + 1e-12);
      }
    }
  }
}

TEST_CASE("value_curve") {
  SweepDescriptor fig1{GameSpec(20, 20, 100.0, 100.0), SweepParameter::kCB,
                       100.0, 200.0, 1.0};
  const auto rows = value_curve(fig1);
  REQUIRE(rows.size() == 101);
  CHECK(rows.front().r_star == 20);
  CHECK(rows.back().r_star == 1);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].r_star <= rows[i - 1].r_star);
  }

  SweepDescriptor fig5{GameSpec(20, 1, 1.0, 1.0), SweepParameter::kN, 1, 40, 1};
  for (const auto& row : value_curve(fig5)) {
    const int n = row.spec.n();
    if (n < 20) CHECK(row.value > 0.0);
    if (n == 20) CHECK(std::abs(row.value) < 1e-15);
    if (n > 20) CHECK(row.value < 0.0);
  }

  SweepDescriptor one{GameSpec(7, 5, 3.0, 4.0), SweepParameter::kCA, 3.0, 3.0, 1.0};
  const auto single = value_curve(one);
  REQUIRE(single.size() == 1);
  const auto sol = solve_equilibrium(GameSpec(7, 5, 3.0, 4.0));
  CHECK(single[0].value == sol.value);
  CHECK(single[0].r_star == sol.r_star);

  CHECK_THROWS_AS(value_curve({GameSpec(2, 2, 1, 1), SweepParameter::kM, 1, 3, 0.5}),
                  Error);
  CHECK_THROWS_AS(value_curve({GameSpec(2, 2, 1, 1), SweepParameter::kCA, 2, 1, 1}),
                  Error);
  CHECK(ParseSweepParameter("cb") == SweepParameter::kCB);
  CHECK(SweepParameterName(SweepParameter::kCA) == "c_A");
  CHECK_THROWS_AS(ParseSweepParameter("q"), Error);
}
