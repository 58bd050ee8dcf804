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

#include "olb/support_oracle.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "olb/error.h"
#include "olb/norms.h"
#include "olb/validation.h"

namespace olb {
namespace {

double U(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

TEST(SupportPointTest, Examples) {
  const SupportResult origin = SupportPointInf({{0, 0}, {-0.5, -0.5}});
  EXPECT_EQ(origin.point, (TargetPoint{{0, 0}, {0, 0}}));
  EXPECT_EQ(origin.h_value, 0.0);

  const SupportResult diag = SupportPointInf({{0.5, 0.5}, {0, 0}});
  EXPECT_NEAR(diag.h_value, 0.5, 1e-12);
  EXPECT_NEAR(diag.point.x[0], 0.5, 1e-12);
  EXPECT_NEAR(diag.point.x[1], 0.5, 1e-12);
  EXPECT_NEAR(diag.point.y[0], 1.0, 1e-12);
  EXPECT_NEAR(diag.point.y[1], 1.0, 1e-12);

  const SupportResult flat = SupportPointInf({{0.5, 0}, {0, -0.5}});
  EXPECT_NEAR(flat.h_value, 0.0, 1e-12);
  EXPECT_EQ(flat.point.y[1], 0.0);
  EXPECT_EQ(flat.point.x, (Vector{0, 0}));
}

TEST(SupportPointTest, MixedSignExample) {
  // The y-grid maximum is 0.1 at y = (0, 1, 0).
  const SupportResult r = SupportPointInf({{0.3, 0.4, 0.1}, {-0.2, 0.1, -0.3}});
  EXPECT_NEAR(r.h_value, 0.1, 1e-12);
  EXPECT_EQ(r.point.x, (Vector{0, 0, 0}));
}

TEST(HValueTest, Examples) {
  EXPECT_EQ(HValue(DualWeight::Zero(3)), 0.0);
  EXPECT_NEAR(HValue({{0.5, 0.5}, {0, 0}}), 0.5, 1e-12);
}

TEST(SupportPointTest, RejectsBadTolerance) {
  SupportOptions o;
  o.tol = 0.0;
  EXPECT_THROW(SupportPointInf(DualWeight::Zero(2), o), DomainError);
  o.tol = 2e-3;
  EXPECT_THROW(SupportPointInf(DualWeight::Zero(2), o), DomainError);
}

TEST(SupportPointTest, FeasibleRecomputableAndDegenerateBranch) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 2000; ++n) {
    const DualWeight w = RandomDualWeight(2 + rng() % 9, rng);
    const SupportResult r = SupportPointInf(w);
    ASSERT_TRUE(InTargetSet(r.point, 1e-9));
    for (std::size_t i = 0; i < w.dim(); ++i) {
      ASSERT_GE(r.point.x[i], 0.0);
      ASSERT_LE(r.point.x[i], 1.0);
      ASSERT_GE(r.point.y[i], 0.0);
      ASSERT_LE(r.point.y[i], 1.0);
    }
    EXPECT_NEAR(r.h_value, Dot(w.w1, r.point.x) + Dot(w.w2, r.point.y), 1e-9);
    bool any_zero = false;
    for (double v : r.point.y) any_zero = any_zero || v == 0.0;
    if (any_zero) {
      for (double v : r.point.x) EXPECT_EQ(v, 0.0);
    }
  }
}

TEST(SupportPointTest, SubgradientInequality) {
  std::mt19937_64 rng(32);
  const double tol = 1e-6;
  for (int n = 0; n < 2000; ++n) {
    const std::size_t k = 2 + rng() % 5;
    const DualWeight w = RandomDualWeight(k, rng);
    const DualWeight u = RandomDualWeight(k, rng);
    const SupportResult s = SupportPointInf(w);
    double inner = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      inner += s.point.x[i] * (w.w1[i] - u.w1[i]) + s.point.y[i] * (w.w2[i] - u.w2[i]);
    }
    EXPECT_LE(s.h_value - HValue(u), inner + 2 * tol);
  }
}

TEST(HValueTest, HomogeneousAndSubadditive) {
  std::mt19937_64 rng(33);
  const double tol = 1e-6;
  for (int n = 0; n < 1000; ++n) {
    const std::size_t k = 2 + rng() % 5;
    const DualWeight w = RandomDualWeight(k, rng);
    const double c = U(rng);
    DualWeight cw = w;
    for (double& v : cw.w1) v *= c;
    for (double& v : cw.w2) v *= c;
    EXPECT_NEAR(HValue(cw), c * HValue(w), c * tol);

    // Halve both so the sum stays inside the ball.
    DualWeight a = RandomDualWeight(k, rng), b = RandomDualWeight(k, rng), sum = a;
    for (std::size_t i = 0; i < k; ++i) {
      a.w1[i] *= 0.5, a.w2[i] *= 0.5, b.w1[i] *= 0.5, b.w2[i] *= 0.5;
      sum.w1[i] = a.w1[i] + b.w1[i];
      sum.w2[i] = a.w2[i] + b.w2[i];
    }
    EXPECT_LE(HValue(sum), HValue(a) + HValue(b) + 2 * tol);
  }
}

TEST(SupportPointTest, ReducedObjectiveIsConcave) {
  std::mt19937_64 rng(34);
  for (int n = 0; n < 1000; ++n) {
    const std::size_t k = 2 + rng() % 4;
    const DualWeight w = RandomDualWeight(k, rng);
    double p = 0.0;
    for (double v : w.w1) p += std::max(0.0, v);
    Vector a(k), b(k), mid(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = 1.0 - U(rng);
      b[i] = 1.0 - U(rng);
      mid[i] = 0.5 * (a[i] + b[i]);
    }
    auto f = [&](const Vector& y) { return p * CStarInf(y) + Dot(w.w2, y); };
    EXPECT_GE(f(mid), 0.5 * (f(a) + f(b)) - 1e-9);
  }
}

TEST(GridSupportOracleTest, Examples) {
  EXPECT_EQ(GridSupportOracle(DualWeight::Zero(2), 1e-2).h_value, 0.0);
  const SupportResult r = GridSupportOracle({{0, 0}, {1, 0}}, 1e-2);
  EXPECT_NEAR(r.h_value, 1.0, 1e-12);
  EXPECT_EQ(r.point.y[0], 1.0);
  EXPECT_THROW(GridSupportOracle(DualWeight::Zero(4), 0.5), DomainError);
}

TEST(GridSupportOracleTest, AgreesWithSolver) {
  const CheckResult r = CheckSupportAgainstGrid(200, 1e-2, 35);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(ProjectedGradientTest, AgreesWithExactSolver) {
  const CheckResult r = CheckSupportSolversAgree(300, 1e-6, 36);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(ProjectedGradientTest, CertifiesInteriorOptimum) {
  // Interior optimum with y_1 small but positive.
  const DualWeight w{{0.48514722065576182, 0.51485277934423823},
                     {0.11845051654106283, -0.88154948345893713}};
  SupportOptions pga;
  pga.solver = SupportSolver::kProjectedGradient;
  const SupportResult exact = SupportPointInf(w);
  const SupportResult ascent = SupportPointInf(w, pga);
  EXPECT_GT(exact.point.y[1], 0.0);
  EXPECT_NEAR(ascent.h_value, exact.h_value, 1e-6);
}

TEST(HyperbolicRewriteTest, Examples) {
  const HyperbolicSides tight = EvaluateHyperbolicSides(1, 1, 1);
  EXPECT_TRUE(tight.product_form);
  EXPECT_TRUE(tight.cone_form);
  const HyperbolicSides loose = EvaluateHyperbolicSides(1, 1, 0.5);
  EXPECT_FALSE(loose.product_form);
  EXPECT_FALSE(loose.cone_form);
  EXPECT_TRUE(HyperbolicRewriteCheck(0, 0, 0));
  EXPECT_TRUE(HyperbolicRewriteCheck(0.5, 0, 2));
}

TEST(HyperbolicRewriteTest, RandomTriples) {
  const CheckResult r = CheckHyperbolicRewrite(100000, 37);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(SocpTest, ConstraintCounts) {
  const SocpProblem two = BuildSocpData({{0.5, 0.5}, {0, 0}});
  EXPECT_EQ(two.cones.size(), 4u);
  EXPECT_EQ(two.equalities.size(), 2u);
  EXPECT_EQ(two.num_variables(), 8u);

  const SocpProblem one = BuildSocpData({{0.5}, {0.5}});
  ASSERT_EQ(one.cones.size(), 1u);
  ASSERT_EQ(one.equalities.size(), 1u);
  EXPECT_EQ(one.num_variables(), 3u);
  const ConeConstraint& c = one.cones[0];
  EXPECT_EQ(c.i, 0u);
  EXPECT_EQ(c.j, 0u);
  // |(2 x1, y1 - z11)| <= y1 + z11 at a tight point x1 = 1, y1 = z11 = 1.
  EXPECT_LE(CheckSocpPoint(one, {1, 1, 1}).max(), 1e-12);
  EXPECT_GT(CheckSocpPoint(one, {1, 1, 0.5}).max(), 0.1);
}

TEST(SocpTest, RoundTrip) {
  const CheckResult r = CheckSocpRoundTrip(100, 1e-2, 38);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(SocpTest, SolverPointLiftsFeasibly) {
  std::mt19937_64 rng(39);
  for (int n = 0; n < 500; ++n) {
    const DualWeight w = RandomDualWeight(2 + rng() % 6, rng);
    const SupportResult r = SupportPointInf(w);
    bool positive = true;
    for (double v : r.point.y) positive = positive && v > 0.0;
    if (!positive) continue;
    const SocpProblem problem = BuildSocpData(w);
    const Vector v = LiftToSocpVariables(r.point);
    EXPECT_LE(CheckSocpPoint(problem, v).max(), 1e-9);
    EXPECT_NEAR(-Dot(problem.objective, v), r.h_value, 1e-12);
  }
}

TEST(SocpTest, JsonExport) {
  const nlohmann::json doc = nlohmann::json::parse(SocpProblemToJson(BuildSocpData({{0.5, 0.5}, {0, 0}})));
  EXPECT_EQ(doc.at("k"), 2);
  EXPECT_EQ(doc.at("num_variables"), 8);
  EXPECT_EQ(doc.at("cones").size(), 4u);
  EXPECT_EQ(doc.at("equalities").size(), 2u);
}

}  // namespace
}  // namespace olb
