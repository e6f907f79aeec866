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

#ifndef GLADIATOR_CORE_HPP_
#define GLADIATOR_CORE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gladiator {

enum class ErrorCode {
  kInvalidArgument,
  kNegativeEntry,
  kBudgetMismatch,
  kAllZero,
  kOutOfDomain,
  kCapExceeded,
};

std::string_view ErrorCodeName(ErrorCode code);

// All validation failures in the library surface as this exception; the code
// lets callers (and the CLI) distinguish usage errors without string matching.
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Team { kA, kB };

std::string_view TeamName(Team team);

// Exogenous parameters of the game: team sizes and total strengths.
class GameSpec {
 public:
  GameSpec(int m, int n, double c_a, double c_b);

  int m() const { return m_; }
  int n() const { return n_; }
  double c_a() const { return c_a_; }
  double c_b() const { return c_b_; }

  // Same game with the two teams' roles exchanged.
  GameSpec Swapped() const { return GameSpec(n_, m_, c_b_, c_a_); }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  int m_;
  int n_;
  double c_a_;
  double c_b_;
};

inline constexpr double kBudgetRelTolerance = 1e-12;

// A nonnegative strength vector whose entries sum to the team budget.
// Entries are stored as given; nothing is renormalized.
class Allocation {
 public:
  const std::vector<double>& strengths() const { return strengths_; }
  std::span<const double> view() const { return strengths_; }
  double budget() const { return budget_; }
  int size() const { return static_cast<int>(strengths_.size()); }
  double operator[](int i) const { return strengths_[static_cast<size_t>(i)]; }

  // Number of strictly positive entries.
  int support_size() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  friend Allocation validate_allocation(std::vector<double> v, double budget);

  Allocation(std::vector<double> strengths, double budget)
      : strengths_(std::move(strengths)), budget_(budget) {}

  std::vector<double> strengths_;
  double budget_;
};

// Throws Error with kNegativeEntry, kBudgetMismatch or kAllZero.
Allocation validate_allocation(std::vector<double> v, double budget);

// Validates against the vector's own sum. Convenient when the budget is
// implied by the strengths (CLI input, tests).
Allocation make_allocation(std::vector<double> v);

// `budget / count` on the first `count` entries of a length-`size` vector.
Allocation equal_split(int size, int count, double budget);

// Pairwise win probability h(a, b).
class ContestRule {
 public:
  enum class Kind { kPowerGamma, kLimitZero, kLimitInfinity };

  static ContestRule PowerGamma(double gamma);
  static ContestRule Ratio() { return PowerGamma(1.0); }
  static ContestRule LimitZero() { return ContestRule(Kind::kLimitZero, 0.0); }
  static ContestRule LimitInfinity() {
    return ContestRule(Kind::kLimitInfinity, 0.0);
  }

  Kind kind() const { return kind_; }
  // Only meaningful for kPowerGamma.
  double gamma() const { return gamma_; }
  bool is_ratio() const { return kind_ == Kind::kPowerGamma && gamma_ == 1.0; }

  std::string ToString() const;

  friend bool operator==(const ContestRule&, const ContestRule&) = default;

 private:
  ContestRule(Kind kind, double gamma) : kind_(kind), gamma_(gamma) {}

  Kind kind_;
  double gamma_;
};

// h(a, b): probability that strength `a` defeats strength `b`.
// h(0, 0) = 1/2 for every rule; h(a, 0) = 1 for a > 0.
double contest_prob(const ContestRule& rule, double a, double b);

enum class Method { kDuelDP, kGeometricDP, kBetaClosedForm, kMonteCarlo };

std::string_view MethodName(Method method);

// A probability tagged with the computation that produced it. Monte Carlo
// results carry a binomial standard error and the trial count.
class WinProbability {
 public:
  static WinProbability Exact(double value, Method method);
  static WinProbability Estimate(double value, double stderr_value,
                                 std::int64_t trials);

  double value() const { return value_; }
  Method method() const { return method_; }
  const std::optional<double>& stderr_value() const { return stderr_; }
  const std::optional<std::int64_t>& trials() const { return trials_; }

  // Payoff H = G - 1/2 to team A.
  double payoff() const { return value_ - 0.5; }

 private:
  WinProbability(double value, Method method, std::optional<double> se,
                 std::optional<std::int64_t> trials)
      : value_(value), method_(method), stderr_(se), trials_(trials) {}

  double value_;
  Method method_;
  std::optional<double> stderr_;
  std::optional<std::int64_t> trials_;
};

}  // namespace gladiator

#endif  // GLADIATOR_CORE_HPP_
