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

#include "gladiator/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace gladiator {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kBudgetMismatch: return "BudgetMismatch";
    case ErrorCode::kAllZero: return "AllZero";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kCapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

std::string_view TeamName(Team team) { return team == Team::kA ? "A" : "B"; }

GameSpec::GameSpec(int m, int n, double c_a, double c_b)
    : m_(m), n_(n), c_a_(c_a), c_b_(c_b) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "team sizes must be at least 1");
  }
  if (!(c_a > 0.0) || !(c_b > 0.0) || !std::isfinite(c_a) ||
      !std::isfinite(c_b)) {
    throw Error(ErrorCode::kInvalidArgument,
                "total strengths must be positive and finite");
  }
}

int Allocation::support_size() const {
  return static_cast<int>(std::count_if(strengths_.begin(), strengths_.end(),
                                        [](double x) { return x > 0.0; }));
}

Allocation validate_allocation(std::vector<double> v, double budget) {
  if (!(budget > 0.0) || !std::isfinite(budget)) {
    throw Error(ErrorCode::kInvalidArgument, "budget must be positive");
  }
  if (v.empty()) {
    throw Error(ErrorCode::kAllZero, "allocation is empty");
  }
  for (size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "entry " + std::to_string(i) + " is not finite");
    }
    if (v[i] < 0.0) {
      throw Error(ErrorCode::kNegativeEntry,
                  "entry " + std::to_string(i) + " is negative");
    }
  }
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (std::abs(sum - budget) > kBudgetRelTolerance * budget) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "entries sum to %.17g, budget is %.17g",
                  sum, budget);
    throw Error(ErrorCode::kBudgetMismatch, buf);
  }
  if (std::none_of(v.begin(), v.end(), [](double x) { return x > 0.0; })) {
    throw Error(ErrorCode::kAllZero, "allocation has no positive entry");
  }
  return Allocation(std::move(v), budget);
}

Allocation make_allocation(std::vector<double> v) {
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (!(sum > 0.0)) {
    // Let validation pick the precise error (negative entry vs all zero).
    for (double x : v) {
      if (x < 0.0) throw Error(ErrorCode::kNegativeEntry, "negative entry");
    }
    throw Error(ErrorCode::kAllZero, "allocation has no positive entry");
  }
  return validate_allocation(std::move(v), sum);
}

Allocation equal_split(int size, int count, double budget) {
  if (count < 1 || count > size) {
    throw Error(ErrorCode::kInvalidArgument,
                "equal_split count must lie in [1, size]");
  }
  std::vector<double> v(static_cast<size_t>(size), 0.0);
  std::fill_n(v.begin(), count, budget / count);
  return validate_allocation(std::move(v), budget);
}

ContestRule ContestRule::PowerGamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidArgument,
                "contest exponent gamma must be positive and finite");
  }
  return ContestRule(Kind::kPowerGamma, gamma);
}

std::string ContestRule::ToString() const {
  switch (kind_) {
    case Kind::kLimitZero: return "zero";
    case Kind::kLimitInfinity: return "inf";
    case Kind::kPowerGamma: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "gamma=%.17g", gamma_);
      return buf;
    }
  }
  return "?";
}

double contest_prob(const ContestRule& rule, double a, double b) {
  if (a < 0.0 || b < 0.0 || std::isnan(a) || std::isnan(b)) {
    throw Error(ErrorCode::kNegativeEntry, "strengths must be nonnegative");
  }
  if (a == b) return 0.5;  // covers h(0, 0)
  switch (rule.kind()) {
    case ContestRule::Kind::kLimitInfinity:
      return a > b ? 1.0 : 0.0;
    case ContestRule::Kind::kLimitZero:
      if (a > 0.0 && b > 0.0) return 0.5;
      return a > 0.0 ? 1.0 : 0.0;
    case ContestRule::Kind::kPowerGamma:
      break;
  }
  if (b == 0.0) return 1.0;
  if (a == 0.0) return 0.0;
  if (rule.gamma() == 1.0) return a / (a + b);
  // Work with the ratio <= 1 so that large exponents underflow to the correct
  // limit instead of producing inf/inf.
  if (a > b) {
    const double t = std::pow(b / a, rule.gamma());
    return 1.0 / (1.0 + t);
  }
  const double t = std::pow(a / b, rule.gamma());
  return t / (1.0 + t);
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kDuelDP: return "duel_dp";
    case Method::kGeometricDP: return "geometric_dp";
    case Method::kBetaClosedForm: return "beta_closed_form";
    case Method::kMonteCarlo: return "monte_carlo";
  }
  return "unknown";
}

WinProbability WinProbability::Exact(double value, Method method) {
  if (method == Method::kMonteCarlo) {
    throw Error(ErrorCode::kInvalidArgument,
                "Monte Carlo results need a standard error");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    // Rounding in 1 - P can leave a few ulps outside [0, 1].
    if (value > -1e-14 && value < 1.0 + 1e-14) {
      value = std::clamp(value, 0.0, 1.0);
    } else {
      throw Error(ErrorCode::kOutOfDomain, "probability outside [0, 1]");
    }
  }
  return WinProbability(value, method, std::nullopt, std::nullopt);
}

WinProbability WinProbability::Estimate(double value, double stderr_value,
                                        std::int64_t trials) {
  if (!(value >= 0.0 && value <= 1.0) || !(stderr_value >= 0.0) ||
      trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "malformed Monte Carlo estimate");
  }
  return WinProbability(value, Method::kMonteCarlo, stderr_value, trials);
}

}  // namespace gladiator
