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

#ifndef GLADIATOR_INEQUALITIES_HPP_
#define GLADIATOR_INEQUALITIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gladiator/equilibrium.hpp"

namespace gladiator {

// Outcome of one machine-checked claim over a grid of instances.
struct CheckReport {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  // Largest amount by which an asserted inequality was missed (0 if none).
  double worst_violation = 0.0;
  bool passed = true;
  // First few failing instances, human readable.
  std::vector<std::string> failure_samples;

  // Records one instance; `violation` > 0 marks a failure.
  void Record(double violation, const std::string& describe_failure);
  void Merge(const CheckReport& other);
};

// Slack for strict monotonicity assertions.
inline constexpr double kMonotoneSlack = 1e-13;
// Tolerance on exact-arithmetic comparisons of probabilities.
inline constexpr double kExactTolerance = 1e-12;

// h(k) = P(sum a_i X_i <= b sum_{j<=n} Y_j) with a = m/k on k entries
// (sum a = m), for k = 1..m. Index 0 holds k = 1.
std::vector<double> equal_split_loss(int m, int n, double b);

// ceil(m / (b (n - 1) - m) - 1), floored at 1; meaningful when m < b (n - 1).
int minimizer_support_bound(int m, int n, double b);

struct MinimizerOptions {
  int grid_k = 12;
  // The composition grid is enumerated only up to this team size.
  int full_grid_max_m = 4;
  std::int64_t cap = kDefaultCompositionCap;
};

// Minimizers of P(sum a_i X_i <= b sum Y_j) over sum a_i = m: equal nonzero
// entries on the composition grid, full spread when m >= (n - 1) b, a single
// gladiator when m <= 2 (n - 1) b / 3, and support at most
// minimizer_support_bound otherwise.
CheckReport check_minimizer_structure(int m, int n, double b,
                                      const MinimizerOptions& options = {});

enum class PerturbationRegime { kDecreasing, kNoInteriorMinimum, kIncreasing };

// lambda = b (k + 1) / m; decreasing when lambda (n - 1) >= k + 2,
// increasing when lambda (n - 1) <= k + 1, no interior minimum in between.
PerturbationRegime perturbation_regime(int k, int m, int n, double b);

// Loss probability along a_1 = (1 - k delta) m / (k + 1),
// a_2 = ... = a_{k+1} = (1 + delta) m / (k + 1), delta in [0, 1/k].
double perturbed_loss(int k, int m, int n, double b, double delta);

// Monotone along the delta family in the outer regimes. Throws
// Error(kOutOfDomain) in the middle regime.
CheckReport check_perturbation_monotonicity(int k, int m, int n, double b,
                                            int steps);

// Middle regime only: the minimum over the delta grid sits at an endpoint.
CheckReport check_perturbation_endpoint_minimum(int k, int m, int n, double b,
                                                int steps);

// c_a = c_b: value > 0 iff m > n, increasing in m, decreasing in n.
CheckReport check_value_monotonicity(int m_max, int n_max);

// Beta/binomial/Poisson/Gamma tails at their means, each monotone in m
// (and n where applicable), evaluated by independent routes.
CheckReport check_betabin_family(int m_max, int n_max);

// P(mean of m exponentials < mean of n). With `shared`, the samples share
// their first n variables and m > n is required.
double statistician_bet(int m, int n, bool shared);

// statistician_bet(m, n, true) is <, =, > 1/2 as m >, =, < 2n.
CheckReport check_bet_trichotomy(int n_max, int m_max);

// I(m/(m+n), m, n) < 1/2 whenever m > n.
CheckReport check_mean_median(int n_max, int m_max);

// All-ones geometric sum with m = n: P(Q <= n - 1) = 1/2 and
// P(Q <= m) > 1/2, i.e. median below the mean m.
CheckReport check_geometric_median(int m_max);

// Duel DP vs beta closed form vs geometric DP on equal splits.
CheckReport check_cross_methods(int r_max, int n_max,
                                const std::vector<std::pair<double, double>>& budgets,
                                double tolerance = 1e-10);

// gamma -> 0 closed form vs duel DP under LimitZero.
CheckReport check_gamma0_closed_form(int m_max, int n_max);

}  // namespace gladiator

#endif  // GLADIATOR_INEQUALITIES_HPP_
