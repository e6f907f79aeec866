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

#include "gladiator/winprob.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "gladiator/parallel.hpp"
#include "gladiator/rng.hpp"
#include "gladiator/special.hpp"
#include "internal/kahan.hpp"

namespace gladiator {
namespace {

struct GeometricSplit {
  double at_most;   // P(Q <= n - 1)
  double overflow;  // P(Q >= n), tracked separately to avoid 1 - x
};

GeometricSplit GeometricConvolution(std::span<const double> a_scaled, int n) {
  // dist[t] = P(Q_1 + ... + Q_i = t) for t < n. Convolving with a geometric
  // pmf (1 - q) q^k reduces to next[t] = (1 - q) dist[t] + q next[t - 1].
  std::vector<double> dist(static_cast<size_t>(n), 0.0);
  dist[0] = 1.0;
  double overflow = 0.0;
  for (double a : a_scaled) {
    const double q = a / (1.0 + a);      // A_i beats a unit opponent
    const double p = 1.0 / (1.0 + a);    // A_i loses
    double prev = 0.0;
    for (size_t t = 0; t < dist.size(); ++t) {
      prev = p * dist[t] + q * prev;
      dist[t] = prev;
    }
    // Mass pushed past n - 1 by this gladiator: (q / p) * next[n - 1].
    overflow += a * dist.back();
  }
  internal::NeumaierSum sum;
  for (double d : dist) sum.Add(d);
  return {sum.Total(), overflow};
}

std::uint64_t ChooseExact(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return c;
}

}  // namespace

double duel_win_from(const Allocation& a, const Allocation& b,
                     const ContestRule& rule, DuelState state) {
  const int m = a.size();
  const int n = b.size();
  if (state.i < 0 || state.i > m || state.j < 0 || state.j > n ||
      (state.i == m && state.j == n)) {
    throw Error(ErrorCode::kInvalidArgument, "duel state out of range");
  }
  if (state.j == n) return 1.0;
  if (state.i == m) return 0.0;

  // w[j] holds W(i, j) for the row being built; before the update of
  // entry j it still holds W(i + 1, j). w[n] = 1 for every live row.
  std::vector<double> w(static_cast<size_t>(n) + 1, 0.0);
  w[static_cast<size_t>(n)] = 1.0;
  for (int i = m - 1; i >= state.i; --i) {
    for (int j = n - 1; j >= 0; --j) {
      const double p = contest_prob(rule, a[i], b[j]);
      const auto uj = static_cast<size_t>(j);
      w[uj] = p * w[uj + 1] + (1.0 - p) * w[uj];
    }
  }
  return w[static_cast<size_t>(state.j)];
}

WinProbability winprob_duel_dp(const Allocation& a, const Allocation& b,
                               const ContestRule& rule) {
  return WinProbability::Exact(duel_win_from(a, b, rule, {0, 0}),
                               Method::kDuelDP);
}

double geometric_sum_cdf(std::span<const double> a_scaled, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  for (double a : a_scaled) {
    if (!(a >= 0.0) || std::isinf(a)) {
      throw Error(ErrorCode::kNegativeEntry,
                  "geometric parameters must be finite and nonnegative");
    }
  }
  return GeometricConvolution(a_scaled, n).at_most;
}

WinProbability winprob_geometric_dp(const Allocation& a, int n,
                                    double b_each) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (!(b_each > 0.0) || std::isinf(b_each)) {
    throw Error(ErrorCode::kInvalidArgument, "b_each must be positive");
  }
  std::vector<double> scaled(a.strengths());
  for (double& x : scaled) x /= b_each;
  return WinProbability::Exact(GeometricConvolution(scaled, n).overflow,
                               Method::kGeometricDP);
}

WinProbability winprob_beta_closed_form(int r, int n, double c_a, double c_b) {
  if (r < 1 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "r and n must be >= 1");
  }
  if (!(c_a > 0.0) || !(c_b > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "strengths must be positive");
  }
  const double rb = r * c_b;
  const double na = n * c_a;
  const double x = rb / (rb + na);
  const double one_minus_x = na / (rb + na);
  // 1 - I(x, r, n) = I(1 - x, n, r).
  return WinProbability::Exact(reg_inc_beta(one_minus_x, x, n, r),
                               Method::kBetaClosedForm);
}

WinProbability winprob_exp_sum_mc(const Allocation& a, const Allocation& b,
                                   std::int64_t trials, std::uint64_t seed,
                                   int workers) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  std::vector<std::int64_t> wins(static_cast<size_t>(std::max(1, workers)), 0);
  parallel_chunks(trials, workers,
                  [&](std::int64_t begin, std::int64_t end, int chunk) {
                    std::int64_t local = 0;
                    for (std::int64_t t = begin; t < end; ++t) {
                      SplitMix64 gen(derive_stream(seed, static_cast<std::uint64_t>(t)));
                      double life_a = 0.0;
                      for (double x : a.strengths()) life_a += x * gen.exponential();
                      double life_b = 0.0;
                      for (double y : b.strengths()) life_b += y * gen.exponential();
                      if (life_a > life_b) ++local;
                    }
                    wins[static_cast<size_t>(chunk)] = local;
                  });
  const auto total = std::accumulate(wins.begin(), wins.end(), std::int64_t{0});
  const double p = static_cast<double>(total) / static_cast<double>(trials);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return WinProbability::Estimate(p, se, trials);
}

WinProbability winprob_gamma0_closed_form(int m, int n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "m and n must be >= 1");
  }
  // Each term is a dyadic rational; while the binomials fit in 53 bits and
  // the exponent range is small the sum is exact in double.
  if (m + n <= 50) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      const double c = static_cast<double>(ChooseExact(n + j - 1, j));
      total += std::ldexp(c, -(n + j));
    }
    return WinProbability::Exact(total, Method::kBetaClosedForm);
  }
  // Equal teams are symmetric: C(2n-1, j) = C(2n-1, 2n-1-j) splits the
  // binomial mass in two halves.
  if (m == n) return WinProbability::Exact(0.5, Method::kBetaClosedForm);
  // Otherwise it is P(Binom(m + n - 1, 1/2) >= n) = I(1/2, n, m).
  return WinProbability::Exact(reg_inc_beta(0.5, 0.5, n, m),
                               Method::kBetaClosedForm);
}

}  // namespace gladiator
