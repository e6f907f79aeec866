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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gladiator/inequalities.hpp"
#include "gladiator/parallel.hpp"
#include "gladiator/rng.hpp"
#include "gladiator/simulator.hpp"
#include "gladiator/winprob.hpp"
#include "json.hpp"

namespace gladiator::cli {
namespace {

using nlohmann::json;

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Usage problems detected after flag parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RuleFlags {
  double gamma = 1.0;
  std::string rule;

  ContestRule Resolve() const {
    if (rule.empty() || rule == "ratio") return ContestRule::PowerGamma(gamma);
    if (rule == "zero") return ContestRule::LimitZero();
    if (rule == "inf") return ContestRule::LimitInfinity();
    throw UsageError("--rule must be one of ratio, zero, inf");
  }
};

void AddRuleFlags(CLI::App* cmd, RuleFlags& flags) {
  auto* g = cmd->add_option("--gamma", flags.gamma, "contest exponent (default 1)")
                ->check(CLI::PositiveNumber);
  auto* r = cmd->add_option("--rule", flags.rule, "limit rule: zero | inf")
                ->check(CLI::IsMember({"ratio", "zero", "inf"}));
  g->excludes(r);
}

json ToJson(const CheckReport& r) {
  return {{"name", r.name},
          {"instances", r.instances},
          {"failures", r.failures},
          {"worst_violation", r.worst_violation},
          {"passed", r.passed},
          {"failure_samples", r.failure_samples}};
}

json ToJson(const WinProbability& w) {
  json j = {{"method", std::string(MethodName(w.method()))}, {"value", w.value()}};
  if (w.stderr_value()) j["stderr"] = *w.stderr_value();
  if (w.trials()) j["trials"] = *w.trials();
  return j;
}

json ToJson(const BattleLog& log) {
  json fights = json::array();
  for (const Fight& f : log.fights) {
    fights.push_back({f.a_index, f.b_index, std::string(TeamName(f.winner))});
  }
  return {{"seed", log.seed},
          {"policy", std::string(PolicyName(log.policy))},
          {"winner", std::string(TeamName(log.winner))},
          {"fights", fights}};
}

// ---------------------------------------------------------------- value

struct ValueFlags {
  int m = 0;
  int n = 0;
  double ca = 0.0;
  double cb = 0.0;
};

int RunValue(const ValueFlags& f, std::ostream& out) {
  const EquilibriumSolution sol = solve_equilibrium(GameSpec(f.m, f.n, f.ca, f.cb));
  json j = {{"m", f.m},
            {"n", f.n},
            {"c_A", f.ca},
            {"c_B", f.cb},
            {"r_star", sol.r_star},
            {"concentration", sol.concentration},
            {"weaker", std::string(TeamName(sol.weaker))},
            {"regime", std::string(RegimeName(sol.regime))},
            {"value", sol.value},
            {"support", sol.support},
            {"a_star", sol.a_star.strengths()},
            {"b_star", sol.b_star.strengths()},
            {"maximizers", sol.maximizers}};
  out << j.dump() << '\n';
  return kExitOk;
}

// -------------------------------------------------------------- winprob

struct WinprobFlags {
  std::vector<double> a;
  std::vector<double> b;
  RuleFlags rule;
  std::string method = "dp";
  std::int64_t trials = 1'000'000;
  std::uint64_t seed = 0;
};

// Common value of the positive entries, or nullopt if they differ.
std::optional<double> CommonPositive(const std::vector<double>& v) {
  std::optional<double> common;
  for (double x : v) {
    if (x == 0.0) continue;
    if (common && *common != x) return std::nullopt;
    common = x;
  }
  return common;
}

int RunWinprob(const WinprobFlags& f, std::ostream& out) {
  const Allocation a = make_allocation(f.a);
  const Allocation b = make_allocation(f.b);
  const ContestRule rule = f.rule.Resolve();
  auto require_ratio = [&] {
    if (!rule.is_ratio()) {
      throw UsageError("--method " + f.method + " needs the ratio rule (gamma 1)");
    }
  };

  WinProbability w = WinProbability::Exact(0.5, Method::kDuelDP);
  if (f.method == "dp") {
    w = winprob_duel_dp(a, b, rule);
  } else if (f.method == "geo") {
    require_ratio();
    if (std::any_of(f.b.begin(), f.b.end(), [&](double x) { return x != f.b[0]; })) {
      throw UsageError("--method geo needs every entry of --b equal");
    }
    w = winprob_geometric_dp(a, b.size(), f.b[0]);
  } else if (f.method == "beta") {
    require_ratio();
    if (!CommonPositive(f.a) || !CommonPositive(f.b)) {
      throw UsageError("--method beta needs equal positive entries on both sides");
    }
    w = winprob_beta_closed_form(a.support_size(), b.support_size(), a.budget(),
                                 b.budget());
  } else if (f.method == "mc") {
    require_ratio();
    w = winprob_exp_sum_mc(a, b, f.trials, f.seed, configured_workers());
  }
  json j = ToJson(w);
  j["rule"] = rule.ToString();
  if (f.method == "mc") j["seed"] = f.seed;
  out << j.dump() << '\n';
  return kExitOk;
}

// -------------------------------------------------------------- figures

struct FiguresFlags {
  std::string figure;
  std::string out;
  std::vector<double> series;
  std::optional<double> start;
  std::optional<double> stop;
  std::optional<double> step;
};

int RunFigures(const FiguresFlags& f, std::ostream& out) {
  std::vector<int> ids;
  if (f.figure == "all") {
    for (int id = 1; id <= 8; ++id) ids.push_back(id);
    if (f.out.empty() || f.out == "-") {
      throw UsageError("--figure all needs --out DIR");
    }
  } else {
    int id = 0;
    try {
      size_t used = 0;
      id = std::stoi(f.figure, &used);
      if (used != f.figure.size()) id = 0;
    } catch (const std::exception&) {
      id = 0;
    }
    if (id < 1 || id > 8) throw UsageError("--figure must be 1..8 or all");
    ids.push_back(id);
  }

  for (int id : ids) {
    FigureSpec spec = DefaultFigure(id);
    if (!f.series.empty()) spec.series = f.series;
    if (f.start) spec.start = *f.start;
    if (f.stop) spec.stop = *f.stop;
    if (f.step) spec.step = *f.step;
    if (f.out.empty() || f.out == "-") {
      WriteFigureCsv(spec, out);
      continue;
    }
    std::filesystem::path path = f.out;
    if (f.figure == "all") {
      std::filesystem::create_directories(path);
      path /= "figure" + std::to_string(id) + ".csv";
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path.string());
    WriteFigureCsv(spec, file);
    if (!file) throw std::runtime_error("write failed for " + path.string());
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify

struct VerifyFlags {
  std::string suite = "all";
  std::optional<int> mmax;
  std::optional<int> nmax;
};

CheckReport Named(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

std::vector<CheckReport> RunSuite(const std::string& suite, const VerifyFlags& f) {
  auto mmax = [&](int d) { return f.mmax.value_or(d); };
  auto nmax = [&](int d) { return f.nmax.value_or(d); };
  std::vector<CheckReport> out;

  if (suite == "minimizer") {
    const int m_max = mmax(6);
    const int n_max = nmax(8);
    CheckReport all;
    for (int m = 1; m <= m_max; ++m) {
      for (int n = 1; n <= n_max; ++n) {
        for (double b : {0.5, 1.0, 1.5, 2.0}) {
          all.Merge(check_minimizer_structure(m, n, b));
        }
      }
    }
    out.push_back(Named(all, "minimizer_structure(m<=" + std::to_string(m_max) +
                                 ",n<=" + std::to_string(n_max) +
                                 ",b in {0.5,1,1.5,2})"));
  } else if (suite == "monotonicity") {
    out.push_back(check_value_monotonicity(mmax(30), nmax(30)));
  } else if (suite == "betabin") {
    out.push_back(check_betabin_family(mmax(50), nmax(50)));
  } else if (suite == "bet") {
    out.push_back(check_bet_trichotomy(nmax(15), mmax(45)));
    out.push_back(check_mean_median(nmax(30), mmax(60)));
    out.push_back(check_geometric_median(mmax(30)));
  } else if (suite == "perturbation") {
    const int m_max = mmax(6);
    const int n_max = nmax(10);
    CheckReport mono;
    CheckReport endpoint;
    for (int m = 2; m <= m_max; ++m) {
      for (int k = 1; k + 1 <= m; ++k) {
        for (int n = 1; n <= n_max; ++n) {
          for (double b : {0.5, 0.75, 1.0, 1.5, 2.0}) {
            if (perturbation_regime(k, m, n, b) ==
                PerturbationRegime::kNoInteriorMinimum) {
              endpoint.Merge(check_perturbation_endpoint_minimum(k, m, n, b, 41));
            } else {
              mono.Merge(check_perturbation_monotonicity(k, m, n, b, 41));
            }
          }
        }
      }
    }
    const std::string grid = "(m<=" + std::to_string(m_max) +
                             ",n<=" + std::to_string(n_max) + ")";
    out.push_back(Named(mono, "perturbation_monotone" + grid));
    out.push_back(Named(endpoint, "perturbation_endpoint_min" + grid));
  } else if (suite == "crosscheck") {
    out.push_back(check_cross_methods(mmax(10), nmax(10),
                                      {{1.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}}));
    out.push_back(check_gamma0_closed_form(mmax(12), nmax(12)));
  }
  return out;
}

int RunVerify(const VerifyFlags& f, std::ostream& out) {
  static const std::vector<std::string> kSuites = {
      "minimizer", "monotonicity", "betabin", "bet", "perturbation", "crosscheck"};
  std::vector<std::string> suites;
  if (f.suite == "all") {
    suites = kSuites;
  } else {
    suites = {f.suite};
  }
  json checks = json::array();
  bool passed = true;
  for (const auto& s : suites) {
    for (const CheckReport& r : RunSuite(s, f)) {
      json j = ToJson(r);
      j["suite"] = s;
      checks.push_back(std::move(j));
      passed = passed && r.passed;
    }
  }
  const json report = {{"suite", f.suite}, {"passed", passed}, {"checks", checks}};
  out << report.dump() << '\n';
  return passed ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------- simulate

struct SimulateFlags {
  std::vector<double> a;
  std::vector<double> b;
  RuleFlags rule;
  std::string policy = "fixed";
  std::int64_t trials = 100'000;
  std::uint64_t seed = 0;
  bool log = false;
};

int RunSimulate(const SimulateFlags& f, std::ostream& out) {
  const Allocation a = make_allocation(f.a);
  const Allocation b = make_allocation(f.b);
  const ContestRule rule = f.rule.Resolve();
  const EngagementPolicy policy = ParsePolicy(f.policy);
  if (f.log) {
    // Battle t replays exactly the stream used for trial t of the estimate.
    for (std::int64_t t = 0; t < f.trials; ++t) {
      const BattleLog log = simulate_battle(
          a, b, rule, policy, derive_stream(f.seed, static_cast<std::uint64_t>(t)));
      out << ToJson(log).dump() << '\n';
    }
  }
  const WinProbability w =
      estimate_winprob(a, b, rule, policy, f.trials, f.seed, configured_workers());
  json j = {{"estimate", w.value()},
            {"stderr", *w.stderr_value()},
            {"trials", f.trials},
            {"seed", f.seed},
            {"policy", std::string(PolicyName(policy))},
            {"rule", rule.ToString()}};
  out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

// --------------------------------------------------------------- figures

FigureSpec DefaultFigure(int id) {
  // Legends are not recoverable from the captions; the series below are
  // small documented grids, overridable with --series.
  switch (id) {
    case 1:
      return {1, "r_star vs c_B, c_A=100, m=n", GameSpec(20, 20, 100, 100),
              SweepParameter::kCB, 100, 200, 1, SeriesKind::kTeamSizes,
              {5, 10, 20, 40}};
    case 2:
      return {2, "r_star vs c_B, c_A=100, n=20", GameSpec(20, 20, 100, 100),
              SweepParameter::kCB, 100, 200, 1, SeriesKind::kM, {5, 10, 20, 40}};
    case 3:
      return {3, "r_star vs c_B, c_A=100, m=40", GameSpec(40, 20, 100, 100),
              SweepParameter::kCB, 100, 200, 1, SeriesKind::kN, {5, 10, 20, 40}};
    case 4:
      return {4, "value vs c_B, c_A=100, m=40", GameSpec(40, 20, 100, 100),
              SweepParameter::kCB, 100, 200, 1, SeriesKind::kN,
              {10, 20, 40, 60}};
    case 5:
      return {5, "value vs n, m=20, c_A=c_B", GameSpec(20, 1, 100, 100),
              SweepParameter::kN, 1, 40, 1, SeriesKind::kEqualBudgets, {100}};
    case 6:
      return {6, "value vs n, m=20, c_A=100, various c_B",
              GameSpec(20, 1, 100, 100), SweepParameter::kN, 1, 40, 1,
              SeriesKind::kCB, {105, 120, 150, 200}};
    case 7:
      return {7, "value vs n, c_A=10, m=20, various c_B", GameSpec(20, 1, 10, 10),
              SweepParameter::kN, 1, 40, 1, SeriesKind::kCB, {10, 12, 15, 20}};
    case 8:
      return {8, "value vs c_B >= 20, c_A=10, m=20", GameSpec(20, 20, 10, 20),
              SweepParameter::kCB, 20, 60, 0.5, SeriesKind::kN, {5, 10, 20, 40}};
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "figure id must be 1..8, got " + std::to_string(id));
  }
}

std::string SeriesColumnName(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::kTeamSizes: return "m=n";
    case SeriesKind::kM: return "m";
    case SeriesKind::kN: return "n";
    case SeriesKind::kEqualBudgets: return "c_A=c_B";
    case SeriesKind::kCB: return "c_B";
  }
  return "series";
}

GameSpec ApplySeries(const GameSpec& base, SeriesKind kind, double value) {
  auto as_int = [](double v) {
    if (v != std::round(v)) {
      throw Error(ErrorCode::kInvalidArgument, "team-size series need integers");
    }
    return static_cast<int>(v);
  };
  switch (kind) {
    case SeriesKind::kTeamSizes:
      return GameSpec(as_int(value), as_int(value), base.c_a(), base.c_b());
    case SeriesKind::kM:
      return GameSpec(as_int(value), base.n(), base.c_a(), base.c_b());
    case SeriesKind::kN:
      return GameSpec(base.m(), as_int(value), base.c_a(), base.c_b());
    case SeriesKind::kEqualBudgets:
      return GameSpec(base.m(), base.n(), value, value);
    case SeriesKind::kCB:
      return GameSpec(base.m(), base.n(), base.c_a(), value);
  }
  return base;
}

void WriteFigureCsv(const FigureSpec& figure, std::ostream& out) {
  out << SweepParameterName(figure.swept) << ',' << SeriesColumnName(figure.series_kind)
      << ",r_star,value,game_m,game_n,game_c_A,game_c_B\n";
  for (double s : figure.series) {
    SweepDescriptor sweep{ApplySeries(figure.base, figure.series_kind, s),
                          figure.swept, figure.start, figure.stop, figure.step};
    for (const ValuePoint& p : value_curve(sweep)) {
      out << Num(p.swept) << ',' << Num(s) << ',' << p.r_star << ','
          << Num(p.value) << ',' << p.spec.m() << ',' << p.spec.n() << ','
          << Num(p.spec.c_a()) << ',' << Num(p.spec.c_b()) << '\n';
    }
  }
}

// ------------------------------------------------------------------- run

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Equilibria, win probabilities and checks for the gladiator game"};
  app.name(args.empty() ? "gladiator" : args[0]);
  app.require_subcommand(1);

  ValueFlags value;
  auto* value_cmd = app.add_subcommand("value", "solve the game and print its value");
  value_cmd->add_option("--m", value.m, "team A size")->required()->check(CLI::PositiveNumber);
  value_cmd->add_option("--n", value.n, "team B size")->required()->check(CLI::PositiveNumber);
  value_cmd->add_option("--ca", value.ca, "team A budget")->required()->check(CLI::PositiveNumber);
  value_cmd->add_option("--cb", value.cb, "team B budget")->required()->check(CLI::PositiveNumber);

  WinprobFlags winprob;
  auto* winprob_cmd = app.add_subcommand("winprob", "probability that team A wins");
  winprob_cmd->add_option("--a", winprob.a, "team A strengths, comma separated")
      ->required()->delimiter(',');
  winprob_cmd->add_option("--b", winprob.b, "team B strengths, comma separated")
      ->required()->delimiter(',');
  AddRuleFlags(winprob_cmd, winprob.rule);
  winprob_cmd->add_option("--method", winprob.method, "dp | geo | beta | mc")
      ->check(CLI::IsMember({"dp", "geo", "beta", "mc"}));
  winprob_cmd->add_option("--trials", winprob.trials, "Monte Carlo trials")
      ->check(CLI::PositiveNumber);
  winprob_cmd->add_option("--seed", winprob.seed, "Monte Carlo seed");

  FiguresFlags figures;
  auto* figures_cmd = app.add_subcommand("figures", "write figure data as CSV");
  figures_cmd->add_option("--figure", figures.figure, "1..8 or all")->required();
  figures_cmd->add_option("--out", figures.out,
                          "output file (directory for 'all'); stdout if omitted");
  figures_cmd->add_option("--series", figures.series, "legend values, comma separated")
      ->delimiter(',');
  figures_cmd->add_option("--start", figures.start, "first sweep point");
  figures_cmd->add_option("--stop", figures.stop, "last sweep point");
  figures_cmd->add_option("--step", figures.step, "sweep step")->check(CLI::PositiveNumber);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the inequality checks");
  verify_cmd->add_option("--suite", verify.suite, "check group to run")
      ->check(CLI::IsMember({"all", "minimizer", "monotonicity", "betabin", "bet",
                             "perturbation", "crosscheck"}));
  verify_cmd->add_option("--mmax", verify.mmax, "largest team A size in the grid")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--nmax", verify.nmax, "largest team B size in the grid")
      ->check(CLI::PositiveNumber);

  SimulateFlags simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "play battles fight by fight");
  simulate_cmd->add_option("--a", simulate.a, "team A strengths")->required()->delimiter(',');
  simulate_cmd->add_option("--b", simulate.b, "team B strengths")->required()->delimiter(',');
  AddRuleFlags(simulate_cmd, simulate.rule);
  simulate_cmd->add_option("--policy", simulate.policy, "fixed | bench | random")
      ->check(CLI::IsMember({"fixed", "bench", "random"}));
  simulate_cmd->add_option("--trials", simulate.trials, "battles to play")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", simulate.seed, "random seed");
  simulate_cmd->add_flag("--log", simulate.log, "print every battle as a JSON line");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("gladiator");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (value_cmd->parsed()) return RunValue(value, out);
    if (winprob_cmd->parsed()) return RunWinprob(winprob, out);
    if (figures_cmd->parsed()) return RunFigures(figures, out);
    if (verify_cmd->parsed()) return RunVerify(verify, out);
    if (simulate_cmd->parsed()) return RunSimulate(simulate, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    // Bad game parameters or allocations from the command line.
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kCapExceeded ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace gladiator::cli
