// Copyright 2026 The OLB Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "olb/config.h"
#include "olb/engine.h"

namespace olb {

struct BoundReport {
  std::size_t horizon = 0;
  double regret = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // regret / bound, 0 when the bound is 0
  bool passed = true;  // regret <= bound
  // Regret <= olo_regret_1 + olo_regret_2 + T * tol.
  double olo_regret_sum = 0.0;
  double chain_budget = 0.0;
  bool chain_passed = true;
};

BoundReport CheckBound(const std::vector<TraceRow>& rows, double tol = 1e-6);
std::string FormatBoundReport(const BoundReport& report);

struct SweepRow {
  std::size_t horizon = 0;
  double regret = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

// Runs `base` once per horizon on up to `workers` threads. Rows come back in
// the order of `horizons`.
std::vector<SweepRow> RunSweep(const GameConfig& base, const std::vector<std::size_t>& horizons,
                               unsigned workers = 1);
void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out);

// Least-squares slope of log(regret) against log(T). NaN when fewer than two
// rows have positive regret.
double LogLogSlope(const std::vector<SweepRow>& rows);

}  // namespace olb
