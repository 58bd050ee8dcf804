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

#include "olb/allocation_oracle.h"

#include <random>

#include <gtest/gtest.h>

#include "olb/dense_simplex.h"
#include "olb/error.h"
#include "olb/validation.h"

namespace olb {
namespace {

TEST(GameValueTest, Examples) {
  EXPECT_DOUBLE_EQ(GameValue({{1, 1}, {0, 0}}, Allocation({0.5, 0.5})), 1.0);
  EXPECT_EQ(GameValue({{-1, 0}, {0, 0}}, Allocation({0.3, 0.7})), 0.0);
  EXPECT_EQ(GameValue({{-1, 1}, {1, 0}}, Allocation({1, 0})), 0.0);
}

TEST(WorstCaseLoadTest, Examples) {
  EXPECT_EQ(WorstCaseLoad({{1, 1}, {0, 0}}, Allocation({0.5, 0.5})), LoadVector({1, 1}));
  EXPECT_EQ(WorstCaseLoad({{-1, -1}, {0, 0}}, Allocation({0.5, 0.5})), LoadVector({0, 0}));
  // (0.1 - 0.2, -0.9 + 0.3) is non-positive in both coordinates.
  EXPECT_EQ(WorstCaseLoad({{1, -1}, {-0.2, 0.3}}, Allocation({0.1, 0.9})), LoadVector({0, 0}));
}

TEST(WorstCaseLoadTest, AttainsCornerMaximum) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 200; ++n) {
    const DualWeight w = RandomDualWeight(3, rng);
    const Allocation alpha = ComputeAllocation(RandomDualWeight(3, rng)).alpha;
    const LoadVector l = WorstCaseLoad(w, alpha);
    double best = 0.0;
    for (int mask = 0; mask < 8; ++mask) {
      double v = 0.0;
      for (int i = 0; i < 3; ++i) {
        if (mask >> i & 1) v += w.w1[i] * alpha[i] + w.w2[i];
      }
      best = std::max(best, v);
    }
    double got = 0.0;
    for (int i = 0; i < 3; ++i) {
      EXPECT_TRUE(l[i] == 0.0 || l[i] == 1.0);
      got += l[i] * (w.w1[i] * alpha[i] + w.w2[i]);
    }
    EXPECT_NEAR(got, best, 1e-15);
    EXPECT_NEAR(got, GameValue(w, alpha), 1e-15);
  }
}

TEST(ComputeAllocationTest, Examples) {
  const AllocationResult flat = ComputeAllocation({{0, 0}, {0.3, -0.3}});
  EXPECT_DOUBLE_EQ(flat.value, 0.3);
  EXPECT_EQ(flat.alpha, Allocation::Uniform(2));

  const AllocationResult a = ComputeAllocation({{2.0 / 3, 1.0 / 3}, {0, 0}});
  EXPECT_EQ(a.alpha.vector(), (Vector{0, 1}));
  EXPECT_NEAR(a.value, 1.0 / 3, 1e-15);

  const AllocationResult b = ComputeAllocation({{-0.5, 0.5}, {0.5, 0}});
  EXPECT_EQ(b.alpha.vector(), (Vector{1, 0}));
  EXPECT_NEAR(b.value, 0.0, 1e-15);
}

TEST(ComputeAllocationTest, ZeroWeightIsUniform) {
  const AllocationResult r = ComputeAllocation(DualWeight::Zero(4));
  EXPECT_EQ(r.alpha, Allocation::Uniform(4));
  EXPECT_EQ(r.value, 0.0);
}

TEST(ComputeAllocationTest, TiesGoToLowestIndex) {
  const AllocationResult r = ComputeAllocation({{0.25, 0.25, 0.25, 0.25}, {0, 0, 0, 0}});
  EXPECT_EQ(r.alpha.vector(), (Vector{1, 0, 0, 0}));
  const AllocationResult s = ComputeAllocation({{0.5, 0.25, 0.25}, {0, 0, 0}});
  EXPECT_EQ(s.alpha.vector(), (Vector{0, 1, 0}));
}

TEST(ComputeAllocationTest, ValueRecomputes) {
  std::mt19937_64 rng(22);
  for (int n = 0; n < 500; ++n) {
    const DualWeight w = RandomDualWeight(2 + rng() % 7, rng);
    const AllocationResult r = ComputeAllocation(w);
    EXPECT_NEAR(r.value, GameValue(w, r.alpha), 1e-9);
  }
}

TEST(ComputeAllocationTest, ScaleCovariance) {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 300; ++n) {
    const DualWeight w = RandomDualWeight(2 + rng() % 5, rng);
    const double c = 0.05 + 0.95 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    DualWeight cw = w;
    for (double& v : cw.w1) v *= c;
    for (double& v : cw.w2) v *= c;
    const AllocationResult scaled = ComputeAllocation(cw);
    EXPECT_NEAR(GameValue(w, scaled.alpha), ComputeAllocation(w).value, 1e-9);
    EXPECT_NEAR(scaled.value, c * ComputeAllocation(w).value, 1e-9);
  }
}

TEST(ComputeAllocationTest, RejectsOutsideBall) {
  EXPECT_THROW(ComputeAllocation({{1, 1}, {0, 0}}), DomainError);
}

TEST(GridAllocationOracleTest, Examples) {
  EXPECT_EQ(GridAllocationOracle(DualWeight::Zero(3), 1e-2).value, 0.0);
  EXPECT_NEAR(GridAllocationOracle({{0.5, 0.5}, {0, 0}}, 1e-2).value, 0.5, 1e-12);
  EXPECT_THROW(GridAllocationOracle(DualWeight::Zero(5), 1e-1), DomainError);
}

TEST(GridAllocationOracleTest, AgreesWithWaterFilling) {
  const CheckResult r = CheckAllocationAgainstGrid(200, 1e-3, 24);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(AllocationLpTest, AgreesWithWaterFilling) {
  const CheckResult r = CheckAllocationAgainstLp(500, 25);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(AllocationLpTest, SpecExamples) {
  EXPECT_NEAR(ComputeAllocationLp({{2.0 / 3, 1.0 / 3}, {0, 0}}).value, 1.0 / 3, 1e-12);
  EXPECT_NEAR(ComputeAllocationLp({{-0.5, 0.5}, {0.5, 0}}).value, 0.0, 1e-12);
  EXPECT_NEAR(ComputeAllocationLp({{0, 0}, {0.3, -0.3}}).value, 0.3, 1e-12);
}

TEST(DenseSimplexTest, SmallPrograms) {
  // min -x1 - x2  s.t.  x1 + 2 x2 + s1 = 4, 3 x1 + x2 + s2 = 6.
  LinearProgram lp;
  lp.a = {{1, 2, 1, 0}, {3, 1, 0, 1}};
  lp.b = {4, 6};
  lp.c = {-1, -1, 0, 0};
  const LinearProgramSolution s = SolveDenseSimplex(lp);
  ASSERT_EQ(s.status, LinearProgramSolution::Status::kOptimal);
  EXPECT_NEAR(s.objective, -2.8, 1e-12);
  EXPECT_NEAR(s.x[0], 1.6, 1e-12);
  EXPECT_NEAR(s.x[1], 1.2, 1e-12);

  LinearProgram infeasible;
  infeasible.a = {{1, 1}};
  infeasible.b = {-1};
  infeasible.c = {0, 0};
  EXPECT_EQ(SolveDenseSimplex(infeasible).status, LinearProgramSolution::Status::kInfeasible);

  LinearProgram unbounded;
  unbounded.a = {{1, -1}};
  unbounded.b = {0};
  unbounded.c = {-1, 0};
  EXPECT_EQ(SolveDenseSimplex(unbounded).status, LinearProgramSolution::Status::kUnbounded);
}

}  // namespace
}  // namespace olb
