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

#include <vector>

namespace olb {

// Dense two-phase primal simplex for small standard-form programs
//
//   minimise c^T x  subject to  A x = b,  x >= 0.
//
// Pivoting uses Bland's rule, so the method terminates on degenerate
// problems at the cost of speed. Intended for a few dozen variables.
struct LinearProgram {
  std::vector<std::vector<double>> a;  // row-major, m rows of n entries
  std::vector<double> b;               // m entries
  std::vector<double> c;               // n entries
};

struct LinearProgramSolution {
  enum class Status { kOptimal, kInfeasible, kUnbounded };

  Status status = Status::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
};

LinearProgramSolution SolveDenseSimplex(const LinearProgram& lp, double tolerance = 1e-12);

}  // namespace olb
