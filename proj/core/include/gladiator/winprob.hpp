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

#ifndef GLADIATOR_WINPROB_HPP_
#define GLADIATOR_WINPROB_HPP_

#include <cstdint>

#include "gladiator/core.hpp"

namespace gladiator {

// Position in the fixed-order duel chain: A's current gladiator `i` and B's
// current gladiator `j`, both 0-based. i == m means A is wiped out, j == n
// means B is.
struct DuelState {
  int i;
  int j;
};

// Probability that A wins from `state`, fixed engagement order, any rule.
// Backward recursion W(i, j) = p W(i, j+1) + (1 - p) W(i+1, j) with
// p = h(a_i, b_j); O(m n) time, O(n) memory.
double duel_win_from(const Allocation& a, const Allocation& b,
                     const ContestRule& rule, DuelState state);

// G_{m,n}(a, b) by the duel-chain recursion. Reference oracle for all the
// other engines.
WinProbability winprob_duel_dp(const Allocation& a, const Allocation& b,
                               const ContestRule& rule);

// G_{m,n}(a, b) for a team B of n equal gladiators of strength `b_each`
// under the ratio rule. Uses 1 - G = P(Q_1 + ... + Q_m <= n - 1) with
// Q_i ~ Geom(1 / (1 + a_i / b_each)) counting opponents beaten by A_i.
WinProbability winprob_geometric_dp(const Allocation& a, int n, double b_each);

// P(Q_1 + ... + Q_m <= n - 1), the loss probability of team A in the
// geometric representation; `a` is already scaled to unit opponents.
double geometric_sum_cdf(std::span<const double> a_scaled, int n);

// A splits c_a equally over r gladiators, B splits c_b equally over n:
// G = 1 - I(r c_b / (r c_b + n c_a), r, n).
WinProbability winprob_beta_closed_form(int r, int n, double c_a, double c_b);

// Monte Carlo estimate of P(sum a_i X_i > sum b_j Y_j) with i.i.d. standard
// exponentials. Trial t draws from derive_stream(seed, t); deterministic for
// a given seed whatever the worker count.
WinProbability winprob_exp_sum_mc(const Allocation& a, const Allocation& b,
                                   std::int64_t trials, std::uint64_t seed,
                                   int workers = 1);

// G_{m,n}(1, 1) under the gamma -> 0 rule (every fight a fair coin):
// sum_{j=0}^{m-1} (1/2)^{n+j} C(n+j-1, j).
WinProbability winprob_gamma0_closed_form(int m, int n);

}  // namespace gladiator

#endif  // GLADIATOR_WINPROB_HPP_
