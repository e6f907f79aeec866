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

// Command-line front end. Everything is reachable through Run so the tests
// can drive it in-process with string streams.
#ifndef GLADIATOR_TOOLS_CLI_HPP_
#define GLADIATOR_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "gladiator/core.hpp"
#include "gladiator/equilibrium.hpp"

namespace gladiator::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

// Which game parameter a figure's legend varies.
enum class SeriesKind { kTeamSizes, kM, kN, kEqualBudgets, kCB };

struct FigureSpec {
  int id;
  std::string title;
  GameSpec base;
  SweepParameter swept;
  double start;
  double stop;
  double step;
  SeriesKind series_kind;
  std::vector<double> series;
};

// Defaults for figures 1..8. Throws Error(kInvalidArgument) otherwise.
FigureSpec DefaultFigure(int id);

std::string SeriesColumnName(SeriesKind kind);

// `base` with the legend parameter set to `value`.
GameSpec ApplySeries(const GameSpec& base, SeriesKind kind, double value);

// Header plus one row per (series value, sweep point), series-major.
void WriteFigureCsv(const FigureSpec& figure, std::ostream& out);

// argv-style entry point; args[0] is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gladiator::cli

#endif  // GLADIATOR_TOOLS_CLI_HPP_
