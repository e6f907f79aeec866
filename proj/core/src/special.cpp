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

#include "gladiator/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gladiator/core.hpp"
#include "internal/kahan.hpp"

namespace gladiator {
namespace {

// Up to this many trials the binomial terms come from exact products and
// powers; beyond it from the saddle-point form below.
constexpr int kDirectSumMaxTrials = 500;

constexpr double kLn2Pi = 1.8378770664093454836;

// log(k!) - ((k + 1/2) log k - k + log(2 pi)/2): the Stirling remainder.
// Small arguments go through long double lgamma, large ones through the
// asymptotic series.
double StirlingError(int k) {
  if (k <= 15) {
    const long double n = k;
    return static_cast<double>(std::lgamma(n + 1.0L) - (n + 0.5L) * std::log(n) +
                               n - 0.5L * static_cast<long double>(kLn2Pi));
  }
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  const double n = k;
  const double nn = n * n;
  if (k > 500) return (s0 - s1 / nn) / n;
  if (k > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (k > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// x log(x / np) + np - x without cancellation when x is close to np.
double DevianceTerm(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

// P(Binom(n, p) = k) with q = 1 - p supplied separately.
double BinomialPmf(int k, int n, double p, double q) {
  if (k == 0) return std::pow(q, n);
  if (k == n) return std::pow(p, n);
  const double lc = StirlingError(n) - StirlingError(k) - StirlingError(n - k) -
                    DevianceTerm(k, n * p) - DevianceTerm(n - k, n * q);
  const double lf = kLn2Pi + std::log(static_cast<double>(k)) +
                    std::log1p(-static_cast<double>(k) / n);
  return std::exp(lc - 0.5 * lf);
}

// P(Poisson(lambda) = k).
double PoissonPmf(int k, double lambda) {
  if (k == 0) return std::exp(-lambda);
  return std::exp(-StirlingError(k) - DevianceTerm(k, lambda)) /
         std::sqrt(2.0 * std::numbers::pi * k);
}

void CheckShapes(int alpha, int beta) {
  if (alpha < 1 || beta < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "incomplete beta shapes must be positive integers");
  }
}

double Clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

double log_choose(int n, int k) {
  if (k < 0 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "log_choose needs 0 <= k <= n");
  }
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double reg_inc_beta(const BetaParams& p) {
  if (!(p.x >= 0.0 && p.x <= 1.0)) {
    throw Error(ErrorCode::kOutOfDomain,
                "incomplete beta argument must lie in [0, 1]");
  }
  return reg_inc_beta(p.x, 1.0 - p.x, p.alpha, p.beta);
}

double reg_inc_beta(double x, double one_minus_x, int alpha, int beta) {
  CheckShapes(alpha, beta);
  if (!(x >= 0.0 && x <= 1.0) || !(one_minus_x >= 0.0 && one_minus_x <= 1.0)) {
    throw Error(ErrorCode::kOutOfDomain,
                "incomplete beta argument must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (one_minus_x == 0.0) return 1.0;

  // I(x, alpha, beta) = P(Binom(trials, x) >= alpha). Sum whichever tail
  // lies away from the mean and complement if it was the lower one.
  const int trials = alpha + beta - 1;
  const bool upper = alpha >= trials * x;
  const int lo = upper ? alpha : 0;
  const int hi = upper ? trials : alpha - 1;
  internal::NeumaierSum sum;
  if (trials <= kDirectSumMaxTrials) {
    double coeff = 1.0;
    for (int j = 1; j <= lo; ++j) coeff = coeff * (trials - j + 1) / j;
    for (int j = lo; j <= hi; ++j) {
      sum.Add(coeff * std::pow(x, j) * std::pow(one_minus_x, trials - j));
      coeff = coeff * (trials - j) / (j + 1);
    }
  } else {
    for (int j = lo; j <= hi; ++j) {
      sum.Add(BinomialPmf(j, trials, x, one_minus_x));
    }
  }
  const double tail = sum.Total();
  return Clamp01(upper ? tail : 1.0 - tail);
}

double gamma_tail(int r, double x) {
  if (r < 1) {
    throw Error(ErrorCode::kInvalidArgument, "gamma_tail needs shape r >= 1");
  }
  if (!(x >= 0.0) || std::isinf(x)) {
    throw Error(ErrorCode::kOutOfDomain,
                "gamma_tail needs a finite nonnegative argument");
  }
  if (x == 0.0) return 1.0;
  // P(Poisson(x) <= r - 1); the upper tail is summed instead when r - 1
  // lies above the mean.
  internal::NeumaierSum sum;
  if (r - 1 <= x) {
    for (int k = 0; k < r; ++k) sum.Add(PoissonPmf(k, x));
    return Clamp01(sum.Total());
  }
  // Terms beyond k decay at least geometrically with ratio x / (k + 1).
  double term = 1.0;
  for (int k = r; term > 0.0; ++k) {
    term = PoissonPmf(k, x);
    sum.Add(term);
    if (term < 1e-300 || (k > x && term < sum.Total() * 1e-18)) break;
  }
  return Clamp01(1.0 - sum.Total());
}

double t0_root() {
  // e^t - 1 - 2t is negative at 1 and positive at 2; convex with a single
  // positive root.
  auto f = [](double t) { return std::expm1(t) - 2.0 * t; };
  double lo = 1.0;
  double hi = 2.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gladiator
