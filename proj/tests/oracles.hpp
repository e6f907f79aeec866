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

// Independent reference computations used only by the tests. Nothing here
// calls into the engines it is used to check.
#ifndef GLADIATOR_TESTS_ORACLES_HPP_
#define GLADIATOR_TESTS_ORACLES_HPP_

#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "gladiator/core.hpp"

namespace gladiator::oracle {

// Nodes and weights of n-point Gauss-Legendre on [-1, 1], by Newton
// iteration on P_n from the Chebyshev guesses.
inline void GaussLegendre(int n, std::vector<double>& nodes,
                          std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes[static_cast<size_t>(i)] = z;
    weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// Composite 20-point Gauss-Legendre over `panels` equal pieces: exact for
// polynomials up to degree 39.
inline double Integrate(const std::function<double(double)>& f, double a,
                        double b, int panels = 64) {
  static const auto rule = [] {
    std::pair<std::vector<double>, std::vector<double>> r;
    GaussLegendre(20, r.first, r.second);
    return r;
  }();
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double piece = 0.0;
    for (size_t i = 0; i < rule.first.size(); ++i) {
      piece += rule.second[i] * f(mid + 0.5 * h * rule.first[i]);
    }
    total += 0.5 * h * piece;
  }
  return total;
}

inline double Factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// I(x, alpha, beta) straight from its integral definition.
inline double BetaByQuadrature(double x, int alpha, int beta) {
  const double b_fn = Factorial(alpha - 1) * Factorial(beta - 1) /
                      Factorial(alpha + beta - 1);
  auto density = [&](double t) {
    return std::pow(t, alpha - 1) * std::pow(1.0 - t, beta - 1);
  };
  return Integrate(density, 0.0, x) / b_fn;
}

// P(G <= x) for G ~ Gamma(r, 1) by quadrature of the density.
inline double GammaCdfByQuadrature(int r, double x) {
  const double norm = Factorial(r - 1);
  auto density = [&](double t) {
    return std::pow(t, r - 1) * std::exp(-t) / norm;
  };
  return Integrate(density, 0.0, x);
}

// Win probability by walking the full fight tree without memoization.
inline double DuelTree(const std::vector<double>& a, const std::vector<double>& b,
                       const ContestRule& rule, size_t i = 0, size_t j = 0) {
  if (j == b.size()) return 1.0;
  if (i == a.size()) return 0.0;
  const double p = contest_prob(rule, a[i], b[j]);
  return p * DuelTree(a, b, rule, i, j + 1) +
         (1.0 - p) * DuelTree(a, b, rule, i + 1, j);
}

// P(Q_1 + ... + Q_m <= n - 1) by enumerating every tuple of counts.
inline double GeometricSumByEnumeration(const std::vector<double>& a, int n,
                                        size_t index = 0, int used = 0) {
  if (index == a.size()) return 1.0;
  const double q = a[index] / (1.0 + a[index]);
  const double p = 1.0 / (1.0 + a[index]);
  double total = 0.0;
  double pmf = p;
  for (int k = 0; used + k <= n - 1; ++k) {
    total += pmf * GeometricSumByEnumeration(a, n, index + 1, used + k);
    pmf *= q;
  }
  return total;
}

// Positive strengths summing to `budget`, some entries optionally zero.
inline std::vector<double> RandomStrengths(std::mt19937_64& rng, int size,
                                           double budget, bool allow_zero) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::bernoulli_distribution zero(0.25);
  std::vector<double> v(static_cast<size_t>(size));
  double sum = 0.0;
  for (auto& x : v) {
    x = (allow_zero && zero(rng)) ? 0.0 : u(rng);
    sum += x;
  }
  if (sum == 0.0) {
    v[0] = 1.0;
    sum = 1.0;
  }
  for (auto& x : v) x *= budget / sum;
  return v;
}

}  // namespace gladiator::oracle

#endif  // GLADIATOR_TESTS_ORACLES_HPP_
