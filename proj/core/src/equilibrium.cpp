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

#include "gladiator/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "gladiator/special.hpp"
#include "gladiator/winprob.hpp"

namespace gladiator {
namespace {

// Brute-force candidates closer than this to the incumbent count as ties.
constexpr double kBruteForceTieTolerance = 1e-14;

struct WeakFrame {
  GameSpec spec;  // weaker team in the A slot
  bool swapped;
};

WeakFrame ToWeakFrame(const GameSpec& spec) {
  if (spec.c_a() <= spec.c_b()) return {spec, false};
  return {spec.Swapped(), true};
}

}  // namespace

std::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kFullSpread: return "FullSpread";
    case Regime::kConcentrated: return "Concentrated";
    case Regime::kInterior: return "Interior";
  }
  return "Unknown";
}

double concentrated_value(int r, int n, double c_a, double c_b) {
  return winprob_beta_closed_form(r, n, c_a, c_b).value() - 0.5;
}

Regime threshold_regime(const GameSpec& spec) {
  if (spec.c_a() > spec.c_b()) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold_regime expects c_a <= c_b; swap the teams first");
  }
  const int n = spec.n();
  if (n == 1) return Regime::kFullSpread;
  if (spec.c_b() * (n - 1) <= n * spec.c_a()) return Regime::kFullSpread;
  if (2.0 * (n - 1) * spec.c_b() >= 3.0 * n * spec.c_a()) {
    return Regime::kConcentrated;
  }
  return Regime::kInterior;
}

EquilibriumSolution solve_equilibrium(const GameSpec& spec) {
  const auto [weak, swapped] = ToWeakFrame(spec);
  const int m = weak.m();
  const int n = weak.n();

  std::vector<double> values(static_cast<size_t>(m));
  for (int r = 1; r <= m; ++r) {
    values[static_cast<size_t>(r - 1)] =
        concentrated_value(r, n, weak.c_a(), weak.c_b());
  }
  const double best = *std::max_element(values.begin(), values.end());
  std::vector<int> maximizers;
  for (int r = 1; r <= m; ++r) {
    if (values[static_cast<size_t>(r - 1)] == best) maximizers.push_back(r);
  }
  const int r = maximizers.front();

  std::vector<int> support(static_cast<size_t>(swapped ? spec.m() : r));
  for (size_t i = 0; i < support.size(); ++i) support[i] = static_cast<int>(i);

  Allocation a_star = swapped ? equal_split(spec.m(), spec.m(), spec.c_a())
                              : equal_split(spec.m(), r, spec.c_a());
  Allocation b_star = swapped ? equal_split(spec.n(), r, spec.c_b())
                              : equal_split(spec.n(), spec.n(), spec.c_b());
  return EquilibriumSolution{
      .spec = spec,
      .weaker = swapped ? Team::kB : Team::kA,
      .concentration = r,
      .r_star = a_star.support_size(),
      .support = std::move(support),
      .a_star = std::move(a_star),
      .b_star = std::move(b_star),
      .value = swapped ? -best : best,
      .regime = threshold_regime(weak),
      .maximizers = std::move(maximizers),
  };
}

std::vector<Allocation> equilibrium_permutations(
    const EquilibriumSolution& solution) {
  const Allocation& weak = solution.weaker == Team::kA ? solution.a_star
                                                       : solution.b_star;
  std::vector<double> v = weak.strengths();
  // From ascending order next_permutation visits each distinct arrangement
  // exactly once.
  std::sort(v.begin(), v.end());
  std::vector<Allocation> out;
  do {
    out.push_back(validate_allocation(v, weak.budget()));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int asymptotic_r_star(int m, double beta) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  if (!(beta >= 1.0) || std::isinf(beta)) {
    throw Error(ErrorCode::kOutOfDomain, "beta = c_b / c_a must be >= 1");
  }
  // Once f(r) > f(r + 1) the sequence keeps decreasing, so the first strict
  // decrease ends the search.
  int best_r = 1;
  double best = gamma_tail(1, beta);
  for (int r = 2; r <= m; ++r) {
    const double f = gamma_tail(r, r * beta);
    if (f < best) break;
    if (f > best) {
      best = f;
      best_r = r;
    }
  }
  return best_r;
}

std::int64_t composition_count(int quanta, int parts) {
  if (quanta < 0 || parts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad composition shape");
  }
  // C(quanta + parts - 1, parts - 1), built incrementally; every partial
  // product is itself a binomial coefficient so the division is exact.
  const std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t c = 1;
  const int k = parts - 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t factor = quanta + i;
    if (c > kMax / factor) return kMax;
    c = c * factor / i;
  }
  return c;
}

Allocation best_response_bruteforce(const GameSpec& spec, const Allocation& b,
                                    int grid_k, std::int64_t cap) {
  if (grid_k < 1) throw Error(ErrorCode::kInvalidArgument, "grid_k must be >= 1");
  if (b.size() != spec.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "opponent allocation length differs from n");
  }
  const int m = spec.m();
  if (composition_count(grid_k, m) > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "composition count exceeds the configured cap");
  }
  const ContestRule rule = ContestRule::Ratio();
  const double quantum = spec.c_a() / grid_k;

  std::vector<int> parts(static_cast<size_t>(m), 0);
  std::vector<double> strengths(static_cast<size_t>(m), 0.0);
  std::vector<int> best_parts;
  double best = -1.0;

  // Lexicographic walk over compositions: parts[0..m-2] chosen freely, the
  // last part takes the remainder.
  auto evaluate = [&] {
    for (size_t i = 0; i < parts.size(); ++i) strengths[i] = parts[i] * quantum;
    const Allocation a = validate_allocation(strengths, spec.c_a());
    const double g = winprob_duel_dp(a, b, rule).value();
    if (best_parts.empty() || g > best + kBruteForceTieTolerance) {
      best = g;
      best_parts = parts;
    }
  };
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == m - 1) {
      parts[static_cast<size_t>(index)] = remaining;
      evaluate();
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      parts[static_cast<size_t>(index)] = k;
      self(self, index + 1, remaining - k);
    }
  };
  recurse(recurse, 0, grid_k);

  for (size_t i = 0; i < best_parts.size(); ++i) {
    strengths[i] = best_parts[i] * quantum;
  }
  return validate_allocation(strengths, spec.c_a());
}

std::string_view SweepParameterName(SweepParameter p) {
  switch (p) {
    case SweepParameter::kM: return "m";
    case SweepParameter::kN: return "n";
    case SweepParameter::kCA: return "c_A";
    case SweepParameter::kCB: return "c_B";
  }
  return "?";
}

SweepParameter ParseSweepParameter(std::string_view name) {
  if (name == "m") return SweepParameter::kM;
  if (name == "n") return SweepParameter::kN;
  if (name == "c_A" || name == "ca" || name == "c_a") return SweepParameter::kCA;
  if (name == "c_B" || name == "cb" || name == "c_b") return SweepParameter::kCB;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown sweep parameter '" + std::string(name) + "'");
}

std::vector<ValuePoint> value_curve(const SweepDescriptor& sweep) {
  if (!(sweep.step > 0.0) || !(sweep.stop >= sweep.start) ||
      !std::isfinite(sweep.start) || !std::isfinite(sweep.stop)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sweep needs step > 0 and stop >= start");
  }
  const auto count = static_cast<std::int64_t>(
      std::floor((sweep.stop - sweep.start) / sweep.step + 1e-9)) + 1;
  std::vector<ValuePoint> rows;
  rows.reserve(static_cast<size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    const double x = sweep.start + static_cast<double>(i) * sweep.step;
    const GameSpec& s = sweep.base;
    auto as_int = [&](double v) {
      const double rounded = std::round(v);
      if (std::abs(v - rounded) > 1e-9) {
        throw Error(ErrorCode::kInvalidArgument,
                    "team-size sweeps need integral points");
      }
      return static_cast<int>(rounded);
    };
    GameSpec point = [&] {
      switch (sweep.parameter) {
        case SweepParameter::kM: return GameSpec(as_int(x), s.n(), s.c_a(), s.c_b());
        case SweepParameter::kN: return GameSpec(s.m(), as_int(x), s.c_a(), s.c_b());
        case SweepParameter::kCA: return GameSpec(s.m(), s.n(), x, s.c_b());
        case SweepParameter::kCB: return GameSpec(s.m(), s.n(), s.c_a(), x);
      }
      return s;
    }();
    const EquilibriumSolution sol = solve_equilibrium(point);
    rows.push_back({x, point, sol.r_star, sol.concentration, sol.value});
  }
  return rows;
}

}  // namespace gladiator
