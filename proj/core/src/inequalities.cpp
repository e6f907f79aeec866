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

#include "gladiator/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>

#include "gladiator/special.hpp"
#include "gladiator/winprob.hpp"
#include "internal/kahan.hpp"

namespace gladiator {
namespace {

constexpr size_t kMaxFailureSamples = 8;

std::string Format(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

// Loss probability of `a` against n opponents of strength b.
double LossAgainstUniform(std::vector<double> a, int n, double b) {
  for (double& x : a) x /= b;
  return geometric_sum_cdf(a, n);
}

int ArgMin(const std::vector<double>& v) {
  return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
}

void CheckGridMinimizer(int m, int n, double b, const MinimizerOptions& opt,
                        const std::vector<double>& h, CheckReport& report) {
  if (composition_count(opt.grid_k, m) > opt.cap) {
    throw Error(ErrorCode::kCapExceeded,
                "composition count exceeds the configured cap");
  }
  const double quantum = static_cast<double>(m) / opt.grid_k;
  std::vector<int> parts(static_cast<size_t>(m), 0);
  std::vector<int> best_parts;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> a(static_cast<size_t>(m));

  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == m - 1) {
      parts[static_cast<size_t>(index)] = remaining;
      for (size_t i = 0; i < a.size(); ++i) a[i] = parts[i] * quantum;
      const double loss = LossAgainstUniform(a, n, b);
      if (best_parts.empty() || loss < best - 1e-14) {
        best = loss;
        best_parts = parts;
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      parts[static_cast<size_t>(index)] = k;
      self(self, index + 1, remaining - k);
    }
  };
  recurse(recurse, 0, opt.grid_k);

  int lo = opt.grid_k;
  int hi = 0;
  int support = 0;
  for (int p : best_parts) {
    if (p == 0) continue;
    ++support;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  report.Record(hi - lo > 1 ? (hi - lo - 1) * quantum : 0.0,
                Format("m=%d n=%d b=%g: grid minimizer entries differ by %d quanta",
                       m, n, b, hi - lo));

  // Equal splits are global minimizers, so no grid point may beat them.
  const double h_min = *std::min_element(h.begin(), h.end());
  report.Record(h_min - best - kExactTolerance,
                Format("m=%d n=%d b=%g: grid point %.17g below equal-split min %.17g",
                       m, n, b, best, h_min));

  // When the best equal split lies on the grid, the grid minimizer must use
  // the same support (or tie it).
  const int k_star = ArgMin(h) + 1;
  if (opt.grid_k % k_star == 0) {
    const double gap =
        support == k_star ? 0.0 : h[static_cast<size_t>(support - 1)] - h_min;
    report.Record(gap - kExactTolerance,
                  Format("m=%d n=%d b=%g: grid support %d vs equal-split argmin %d",
                         m, n, b, support, k_star));
  }
}

}  // namespace

void CheckReport::Record(double violation, const std::string& describe_failure) {
  ++instances;
  if (violation > 0.0) {
    ++failures;
    passed = false;
    worst_violation = std::max(worst_violation, violation);
    if (failure_samples.size() < kMaxFailureSamples) {
      failure_samples.push_back(describe_failure);
    }
  }
}

void CheckReport::Merge(const CheckReport& other) {
  instances += other.instances;
  failures += other.failures;
  worst_violation = std::max(worst_violation, other.worst_violation);
  passed = passed && other.passed;
  for (const auto& s : other.failure_samples) {
    if (failure_samples.size() >= kMaxFailureSamples) break;
    failure_samples.push_back(s);
  }
}

std::vector<double> equal_split_loss(int m, int n, double b) {
  if (m < 1 || n < 1 || !(b > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need m, n >= 1 and b > 0");
  }
  std::vector<double> h(static_cast<size_t>(m));
  for (int k = 1; k <= m; ++k) {
    std::vector<double> a(static_cast<size_t>(m), 0.0);
    std::fill_n(a.begin(), k, static_cast<double>(m) / k);
    h[static_cast<size_t>(k - 1)] = LossAgainstUniform(std::move(a), n, b);
  }
  return h;
}

int minimizer_support_bound(int m, int n, double b) {
  const double gap = b * (n - 1) - m;
  if (!(gap > 0.0)) return m;
  const double raw = std::ceil(m / gap - 1.0 - 1e-12);
  return static_cast<int>(std::clamp(raw, 1.0, static_cast<double>(m)));
}

CheckReport check_minimizer_structure(int m, int n, double b,
                                      const MinimizerOptions& options) {
  CheckReport report;
  report.name = Format("minimizer_structure(m=%d,n=%d,b=%g)", m, n, b);
  const std::vector<double> h = equal_split_loss(m, n, b);
  const double h_min = *std::min_element(h.begin(), h.end());
  auto gap_at = [&](int k) { return h[static_cast<size_t>(k - 1)] - h_min; };

  if (m >= (n - 1) * b) {
    report.Record(gap_at(m) - kExactTolerance,
                  Format("m=%d n=%d b=%g: full spread is not the minimizer "
                         "(argmin k=%d)", m, n, b, ArgMin(h) + 1));
  }
  if (3.0 * m <= 2.0 * (n - 1) * b) {
    report.Record(gap_at(1) - kExactTolerance,
                  Format("m=%d n=%d b=%g: single gladiator is not the minimizer "
                         "(argmin k=%d)", m, n, b, ArgMin(h) + 1));
  }
  if (m < b * (n - 1)) {
    const int bound = minimizer_support_bound(m, n, b);
    const double best_within =
        *std::min_element(h.begin(), h.begin() + bound);
    report.Record(best_within - h_min - kExactTolerance,
                  Format("m=%d n=%d b=%g: argmin k=%d exceeds bound %d", m, n,
                         b, ArgMin(h) + 1, bound));
  }
  if (m <= options.full_grid_max_m) {
    CheckGridMinimizer(m, n, b, options, h, report);
  }
  if (report.instances == 0) {
    // Interior case with m > full_grid_max_m: only the bound applies, and it
    // is recorded above. Reaching here means nothing was asserted.
    report.Record(0.0, "");
  }
  return report;
}

PerturbationRegime perturbation_regime(int k, int m, int n, double b) {
  // lambda (n - 1) compared with k + 1 and k + 2, multiplied through by m.
  const double lhs = b * (k + 1) * (n - 1);
  if (lhs >= static_cast<double>(k + 2) * m) return PerturbationRegime::kDecreasing;
  if (lhs <= static_cast<double>(k + 1) * m) return PerturbationRegime::kIncreasing;
  return PerturbationRegime::kNoInteriorMinimum;
}

double perturbed_loss(int k, int m, int n, double b, double delta) {
  if (k < 1 || k + 1 > m) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= k and k + 1 <= m");
  }
  if (!(delta >= 0.0 && delta <= 1.0 / k + 1e-15)) {
    throw Error(ErrorCode::kOutOfDomain, "delta must lie in [0, 1/k]");
  }
  std::vector<double> a(static_cast<size_t>(m), 0.0);
  const double base = static_cast<double>(m) / (k + 1);
  a[0] = std::max(0.0, (1.0 - k * delta) * base);
  for (int i = 1; i <= k; ++i) a[static_cast<size_t>(i)] = (1.0 + delta) * base;
  return LossAgainstUniform(std::move(a), n, b);
}

namespace {

std::vector<double> DeltaPath(int k, int m, int n, double b, int steps) {
  if (steps < 2) throw Error(ErrorCode::kInvalidArgument, "steps must be >= 2");
  std::vector<double> path(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double delta =
        (i == steps - 1) ? 1.0 / k : static_cast<double>(i) / (k * (steps - 1.0));
    path[static_cast<size_t>(i)] = perturbed_loss(k, m, n, b, delta);
  }
  return path;
}

void CheckEndpoints(int k, int m, int n, double b, const std::vector<double>& path,
                    CheckReport& report) {
  const std::vector<double> h = equal_split_loss(m, n, b);
  report.Record(std::abs(path.front() - h[static_cast<size_t>(k)]) - kExactTolerance,
                Format("k=%d m=%d n=%d b=%g: delta=0 differs from h(k+1)", k, m, n, b));
  report.Record(std::abs(path.back() - h[static_cast<size_t>(k - 1)]) - kExactTolerance,
                Format("k=%d m=%d n=%d b=%g: delta=1/k differs from h(k)", k, m, n, b));
}

}  // namespace

CheckReport check_perturbation_monotonicity(int k, int m, int n, double b,
                                            int steps) {
  const PerturbationRegime regime = perturbation_regime(k, m, n, b);
  if (regime == PerturbationRegime::kNoInteriorMinimum) {
    throw Error(ErrorCode::kOutOfDomain,
                "k + 1 < lambda (n - 1) < k + 2: use the endpoint-minimum check");
  }
  CheckReport report;
  const bool decreasing = regime == PerturbationRegime::kDecreasing;
  report.name = Format("perturbation_%s(k=%d,m=%d,n=%d,b=%g)",
                       decreasing ? "decreasing" : "increasing", k, m, n, b);
  const std::vector<double> path = DeltaPath(k, m, n, b, steps);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const double rise = path[i + 1] - path[i];
    const double violation = decreasing ? rise : -rise;
    report.Record(violation - kExactTolerance,
                  Format("k=%d m=%d n=%d b=%g: step %zu moves by %.3e", k, m, n,
                         b, i, rise));
  }
  CheckEndpoints(k, m, n, b, path, report);
  return report;
}

CheckReport check_perturbation_endpoint_minimum(int k, int m, int n, double b,
                                                int steps) {
  if (perturbation_regime(k, m, n, b) != PerturbationRegime::kNoInteriorMinimum) {
    throw Error(ErrorCode::kOutOfDomain,
                "endpoint-minimum check applies only to the middle regime");
  }
  if (steps < 3) throw Error(ErrorCode::kInvalidArgument, "steps must be >= 3");
  CheckReport report;
  report.name = Format("perturbation_endpoint_min(k=%d,m=%d,n=%d,b=%g)", k, m, n, b);
  const std::vector<double> path = DeltaPath(k, m, n, b, steps);
  const double interior_min =
      *std::min_element(path.begin() + 1, path.end() - 1);
  const double endpoint_min = std::min(path.front(), path.back());
  report.Record(endpoint_min - interior_min - kExactTolerance,
                Format("k=%d m=%d n=%d b=%g: interior minimum %.17g below "
                       "endpoints %.17g", k, m, n, b, interior_min, endpoint_min));
  CheckEndpoints(k, m, n, b, path, report);
  return report;
}

CheckReport check_value_monotonicity(int m_max, int n_max) {
  CheckReport report;
  report.name = Format("value_monotonicity(m<=%d,n<=%d)", m_max, n_max);
  std::vector<std::vector<double>> v(static_cast<size_t>(m_max) + 1,
                                     std::vector<double>(static_cast<size_t>(n_max) + 1));
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) {
      const double value = solve_equilibrium(GameSpec(m, n, 1.0, 1.0)).value;
      v[static_cast<size_t>(m)][static_cast<size_t>(n)] = value;
      double violation;
      if (m > n) {
        violation = -value;
      } else if (m < n) {
        violation = value;
      } else {
        violation = std::abs(value) - kMonotoneSlack;
      }
      report.Record(violation, Format("m=%d n=%d: value %.17g has the wrong sign",
                                      m, n, value));
    }
  }
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) {
      const double here = v[static_cast<size_t>(m)][static_cast<size_t>(n)];
      if (m < m_max) {
        const double up = v[static_cast<size_t>(m + 1)][static_cast<size_t>(n)];
        report.Record(here - up - kMonotoneSlack,
                      Format("m=%d n=%d: value does not increase in m", m, n));
      }
      if (n < n_max) {
        const double right = v[static_cast<size_t>(m)][static_cast<size_t>(n + 1)];
        report.Record(right - here - kMonotoneSlack,
                      Format("m=%d n=%d: value does not decrease in n", m, n));
      }
    }
  }
  return report;
}

namespace {

// P(T >= m), T ~ Binom(m + n - 1, m / (m + n)), from the pmf recurrence.
double BinomialUpperTail(int m, int n) {
  const int trials = m + n - 1;
  const double p = static_cast<double>(m) / (m + n);
  const double q = static_cast<double>(n) / (m + n);
  double pmf = std::pow(q, trials);
  internal::NeumaierSum tail;
  for (int k = 0; k <= trials; ++k) {
    if (k >= m) tail.Add(pmf);
    pmf = pmf * (trials - k) / (k + 1) * (p / q);
  }
  return tail.Total();
}

// P(S >= m), S ~ Poisson(m), from the pmf recurrence in log space.
double PoissonUpperTail(int m) {
  internal::NeumaierSum below;
  double log_pmf = -static_cast<double>(m);
  for (int k = 0; k < m; ++k) {
    below.Add(std::exp(log_pmf));
    log_pmf += std::log(static_cast<double>(m)) - std::log(k + 1.0);
  }
  return 1.0 - below.Total();
}

}  // namespace

CheckReport check_betabin_family(int m_max, int n_max) {
  CheckReport report;
  report.name = Format("betabin_family(m<=%d,n<=%d)", m_max, n_max);
  auto beta_at_mean = [](int m, int n) {
    return reg_inc_beta(static_cast<double>(m) / (m + n),
                        static_cast<double>(n) / (m + n), m, n);
  };
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) {
      const double beta = beta_at_mean(m, n);
      const double binom = BinomialUpperTail(m, n);
      report.Record(std::abs(beta - binom) - kExactTolerance,
                    Format("m=%d n=%d: I=%.17g but P(T>=m)=%.17g", m, n, beta, binom));
      if (m < m_max) {
        report.Record(beta_at_mean(m + 1, n) - beta - kMonotoneSlack,
                      Format("m=%d n=%d: I(m/(m+n),m,n) not decreasing in m", m, n));
        report.Record(BinomialUpperTail(m + 1, n) - binom - kMonotoneSlack,
                      Format("m=%d n=%d: P(T>=m) not decreasing in m", m, n));
      }
      if (n < n_max) {
        report.Record(beta - beta_at_mean(m, n + 1) - kMonotoneSlack,
                      Format("m=%d n=%d: I(m/(m+n),m,n) not increasing in n", m, n));
        report.Record(binom - BinomialUpperTail(m, n + 1) - kMonotoneSlack,
                      Format("m=%d n=%d: P(T>=m) not increasing in n", m, n));
      }
    }
  }
  for (int m = 1; m <= m_max; ++m) {
    const double poisson = PoissonUpperTail(m);
    const double gamma_cdf = 1.0 - gamma_tail(m, m);
    report.Record(std::abs(poisson - gamma_cdf) - kExactTolerance,
                  Format("m=%d: Poisson tail %.17g vs Gamma CDF %.17g", m,
                         poisson, gamma_cdf));
    if (m < m_max) {
      report.Record(PoissonUpperTail(m + 1) - poisson - kMonotoneSlack,
                    Format("m=%d: P(S>=m) not decreasing", m));
      report.Record((1.0 - gamma_tail(m + 1, m + 1)) - gamma_cdf - kMonotoneSlack,
                    Format("m=%d: P(R<=m) not decreasing", m));
    }
  }
  return report;
}

double statistician_bet(int m, int n, bool shared) {
  if (m < 1 || n < 1) throw Error(ErrorCode::kInvalidArgument, "m, n must be >= 1");
  if (!shared) {
    return reg_inc_beta(static_cast<double>(m) / (m + n),
                        static_cast<double>(n) / (m + n), m, n);
  }
  if (m <= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "shared samples need m > n (the larger sample has m - n extras)");
  }
  // Shared variables cancel, leaving m - n private draws against n.
  const int extra = m - n;
  return reg_inc_beta(static_cast<double>(extra) / m, static_cast<double>(n) / m,
                      extra, n);
}

CheckReport check_bet_trichotomy(int n_max, int m_max) {
  CheckReport report;
  report.name = Format("bet_trichotomy(n<=%d,m<=%d)", n_max, m_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int m = n + 1; m <= m_max; ++m) {
      const double p = statistician_bet(m, n, true);
      double violation;
      if (m > 2 * n) {
        violation = p - 0.5 + kMonotoneSlack;
      } else if (m < 2 * n) {
        violation = 0.5 - p + kMonotoneSlack;
      } else {
        violation = std::abs(p - 0.5) - 1e-15;
      }
      report.Record(violation, Format("m=%d n=%d: shared bet %.17g", m, n, p));
    }
  }
  return report;
}

CheckReport check_mean_median(int n_max, int m_max) {
  CheckReport report;
  report.name = Format("mean_median(n<=%d,m<=%d)", n_max, m_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int m = n + 1; m <= m_max; ++m) {
      const double p = statistician_bet(m, n, false);
      report.Record(p - 0.5 + kMonotoneSlack,
                    Format("m=%d n=%d: I(m/(m+n),m,n)=%.17g", m, n, p));
    }
  }
  return report;
}

CheckReport check_geometric_median(int m_max) {
  CheckReport report;
  report.name = Format("geometric_median(m<=%d)", m_max);
  for (int m = 1; m <= m_max; ++m) {
    const std::vector<double> ones(static_cast<size_t>(m), 1.0);
    const double at_n_minus_1 = geometric_sum_cdf(ones, m);
    report.Record(std::abs(at_n_minus_1 - 0.5) - kExactTolerance,
                  Format("m=%d: P(Q<=m-1)=%.17g", m, at_n_minus_1));
    const double at_mean = geometric_sum_cdf(ones, m + 1);
    report.Record(0.5 - at_mean + kMonotoneSlack,
                  Format("m=%d: P(Q<=m)=%.17g not above 1/2", m, at_mean));
  }
  return report;
}

CheckReport check_cross_methods(
    int r_max, int n_max, const std::vector<std::pair<double, double>>& budgets,
    double tolerance) {
  CheckReport report;
  report.name = Format("cross_methods(r<=%d,n<=%d)", r_max, n_max);
  const ContestRule ratio = ContestRule::Ratio();
  for (const auto& [c_a, c_b] : budgets) {
    for (int r = 1; r <= r_max; ++r) {
      for (int n = 1; n <= n_max; ++n) {
        const Allocation a = equal_split(r, r, c_a);
        const Allocation b = equal_split(n, n, c_b);
        const double dp = winprob_duel_dp(a, b, ratio).value();
        const double beta = winprob_beta_closed_form(r, n, c_a, c_b).value();
        const double geo = winprob_geometric_dp(a, n, c_b / n).value();
        report.Record(std::abs(dp - beta) - tolerance,
                      Format("r=%d n=%d c=(%g,%g): dp %.17g beta %.17g", r, n,
                             c_a, c_b, dp, beta));
        report.Record(std::abs(dp - geo) - tolerance,
                      Format("r=%d n=%d c=(%g,%g): dp %.17g geo %.17g", r, n,
                             c_a, c_b, dp, geo));
      }
    }
  }
  return report;
}

CheckReport check_gamma0_closed_form(int m_max, int n_max) {
  CheckReport report;
  report.name = Format("gamma0_closed_form(m<=%d,n<=%d)", m_max, n_max);
  const ContestRule zero = ContestRule::LimitZero();
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) {
      // Any positive strengths give every fight even odds under this rule.
      std::vector<double> a(static_cast<size_t>(m));
      std::vector<double> b(static_cast<size_t>(n));
      for (int i = 0; i < m; ++i) a[static_cast<size_t>(i)] = 1.0 + 0.5 * i;
      for (int j = 0; j < n; ++j) b[static_cast<size_t>(j)] = 3.0 / (j + 1);
      const double dp =
          winprob_duel_dp(make_allocation(a), make_allocation(b), zero).value();
      const double closed = winprob_gamma0_closed_form(m, n).value();
      report.Record(std::abs(dp - closed) - kExactTolerance,
                    Format("m=%d n=%d: dp %.17g closed form %.17g", m, n, dp, closed));
      if (m == n) {
        report.Record(closed == 0.5 ? 0.0 : std::abs(closed - 0.5),
                      Format("m=n=%d: closed form %.17g is not 1/2", m, closed));
      }
    }
  }
  return report;
}

}  // namespace gladiator
