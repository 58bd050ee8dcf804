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

#include "olb/types.h"

namespace olb {

// Allocation step of the reduction: the player's response alpha to a dual
// weight w, minimising max over l in [0,1]^K of <w, (alpha (.) l, l)>.
//
// The inner maximum separates per server, so the game value is
//   V(w, alpha) = sum_i max(0, w1_i alpha_i + w2_i).
struct AllocationResult {
  Allocation alpha;
  double value = 0.0;  // game value attained by alpha
};

// sum_i max(0, w1_i alpha_i + w2_i).
double GameValue(const DualWeight& w, const Allocation& alpha);

// Maximising environment response: l_i = 1 iff w1_i alpha_i + w2_i > 0.
LoadVector WorstCaseLoad(const DualWeight& w, const Allocation& alpha);

// Exact minimiser of GameValue over the simplex by water-filling: mass is
// poured into the linear pieces of the per-server objectives in order of
// increasing slope, ties broken by lowest server index. When w1 = 0 every
// allocation is optimal and the uniform one is returned.
AllocationResult ComputeAllocation(const DualWeight& w);

// Same minimisation posed as the linear program
//   min sum_i beta_i  s.t.  beta_i >= w1_i alpha_i + w2_i,  beta >= 0,
// and solved with the dense simplex method. Used as an independent route.
AllocationResult ComputeAllocationLp(const DualWeight& w);

// Exhaustive search over the simplex grid with spacing `resolution`. Refuses
// K > 4 with DomainError. Test oracle.
AllocationResult GridAllocationOracle(const DualWeight& w, double resolution);

}  // namespace olb
