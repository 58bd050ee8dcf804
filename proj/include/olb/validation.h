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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "olb/types.h"

namespace olb {

// Outcome of one cross-validation suite.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Random dual weight with each half inside the L1 unit ball. Mixes interior
// draws, boundary draws and sparse draws with zeroed entries.
DualWeight RandomDualWeight(std::size_t k, std::mt19937_64& rng);

// Closed-form C* against a simplex-grid minimum (K in {2,3}, entries in (0,1]).
CheckResult CheckCStarAgainstGrid(int draws, double resolution, double tolerance, std::uint64_t seed);

// Water-filling allocation against the simplex grid: value <= grid + 1e-9 and
// >= grid - K * resolution.
CheckResult CheckAllocationAgainstGrid(int draws, double resolution, std::uint64_t seed);

// Water-filling against the dense simplex LP on the same draws.
CheckResult CheckAllocationAgainstLp(int draws, std::uint64_t seed);

// Support solver against the y-grid: |h - h_grid| <= 2 K resolution and the
// returned point lies in S to 1e-9.
CheckResult CheckSupportAgainstGrid(int draws, double resolution, std::uint64_t seed);

// Exact KKT solver against multi-start projected gradient ascent.
CheckResult CheckSupportSolversAgree(int draws, double tol, std::uint64_t seed);

// h_S(w) - V(w) >= -1e-6 on random w.
CheckResult CheckBlackwellCondition(int draws, std::uint64_t seed);

// Both sides of the hyperbolic rewrite agree on random triples in [0,2]^3 and
// on the boundary triples (1,1,1) and (1,1,0.5).
CheckResult CheckHyperbolicRewrite(int draws, std::uint64_t seed);

// Grid-oracle optima lifted with z_ij = x_i (1/y_j) / sum_k (1/y_k) satisfy
// every emitted SOCP constraint to 1e-9.
CheckResult CheckSocpRoundTrip(int draws, double resolution, std::uint64_t seed);

// EG+- against alternating-sign and prediction-tracking adversaries with
// costs in {-1,1}^d: regret <= sqrt(2 T ln 2d) on every run.
CheckResult CheckEgRegret(const std::vector<std::size_t>& dims, std::size_t horizon,
                          const std::vector<std::uint64_t>& seeds);

// The suites run by `olb selftest`, at acceptance sizes.
std::vector<CheckResult> RunSelfTest(std::uint64_t seed = 20260101);

}  // namespace olb
