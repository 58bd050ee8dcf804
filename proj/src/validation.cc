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

#include "olb/validation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "olb/allocation_oracle.h"
#include "olb/norms.h"
#include "olb/olo.h"
#include "olb/support_oracle.h"

namespace olb {
namespace {

double Uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vector RandomBallPoint(std::size_t k, std::mt19937_64& rng, int mode) {
  Vector v(k);
  for (double& x : v) x = 2.0 * Uniform(rng) - 1.0;
  if (mode == 2) {
    // Sparse: zero out roughly half of the entries.
    for (double& x : v) {
      if (Uniform(rng) < 0.5) x = 0.0;
    }
  }
  const double n = L1Norm(v);
  if (n == 0.0) return v;
  const double radius = mode == 1 ? 1.0 : Uniform(rng);
  for (double& x : v) x *= radius / n;
  return v;
}

std::size_t PickK(std::mt19937_64& rng) { return 2 + static_cast<std::size_t>(rng() % 2); }

std::string Summary(int checked, int failures, double worst, const std::string& worst_label) {
  std::ostringstream out;
  out.precision(6);
  out << checked << " cases, " << failures << " failures, worst " << worst_label << " " << worst;
  return out.str();
}

}  // namespace

DualWeight RandomDualWeight(std::size_t k, std::mt19937_64& rng) {
  const int mode = static_cast<int>(rng() % 3);
  DualWeight w{RandomBallPoint(k, rng, mode), RandomBallPoint(k, rng, mode)};
  return w;
}

CheckResult CheckCStarAgainstGrid(int draws, double resolution, double tolerance, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double worst = 0.0;
  const auto steps = static_cast<long>(std::llround(1.0 / resolution));
  for (int n = 0; n < draws; ++n) {
    const std::size_t k = PickK(rng);
    Vector l(k);
    // (0, 1]
    for (double& v : l) v = 1.0 - Uniform(rng);
    double grid = std::numeric_limits<double>::infinity();
    if (k == 2) {
      for (long a = 0; a <= steps; ++a) {
        const double a0 = static_cast<double>(a) / steps;
        grid = std::min(grid, std::max(a0 * l[0], (1.0 - a0) * l[1]));
      }
    } else {
      for (long a = 0; a <= steps; ++a) {
        for (long b = 0; a + b <= steps; ++b) {
          const double a0 = static_cast<double>(a) / steps;
          const double a1 = static_cast<double>(b) / steps;
          const double a2 = static_cast<double>(steps - a - b) / steps;
          grid = std::min(grid, std::max({a0 * l[0], a1 * l[1], a2 * l[2]}));
        }
      }
    }
    const double err = std::abs(CStarInf(l) - grid);
    worst = std::max(worst, err);
    if (err > tolerance) ++failures;
  }
  return {"cstar closed form vs simplex grid", failures == 0, Summary(draws, failures, worst, "|error|")};
}

CheckResult CheckAllocationAgainstGrid(int draws, double resolution, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double worst = 0.0;
  for (int n = 0; n < draws; ++n) {
    const std::size_t k = PickK(rng);
    const DualWeight w = RandomDualWeight(k, rng);
    const AllocationResult fast = ComputeAllocation(w);
    const AllocationResult grid = GridAllocationOracle(w, resolution);
    const bool ok = fast.value <= grid.value + 1e-9 &&
                    fast.value >= grid.value - static_cast<double>(k) * resolution &&
                    std::abs(fast.value - GameValue(w, fast.alpha)) <= 1e-9;
    worst = std::max(worst, fast.value - grid.value);
    if (!ok) ++failures;
  }
  return {"allocation oracle vs simplex grid", failures == 0,
          Summary(draws, failures, worst, "value - grid")};
}

CheckResult CheckAllocationAgainstLp(int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double worst = 0.0;
  for (int n = 0; n < draws; ++n) {
    const std::size_t k = 2 + static_cast<std::size_t>(rng() % 7);
    const DualWeight w = RandomDualWeight(k, rng);
    const double diff = std::abs(ComputeAllocation(w).value - ComputeAllocationLp(w).value);
    worst = std::max(worst, diff);
    if (diff > 1e-9) ++failures;
  }
  return {"water-filling vs dense simplex LP", failures == 0, Summary(draws, failures, worst, "|diff|")};
}

CheckResult CheckSupportAgainstGrid(int draws, double resolution, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double worst = 0.0;
  for (int n = 0; n < draws; ++n) {
    const std::size_t k = PickK(rng);
    const DualWeight w = RandomDualWeight(k, rng);
    const SupportResult solver = SupportPointInf(w);
    const SupportResult grid = GridSupportOracle(w, resolution);
    const double diff = std::abs(solver.h_value - grid.h_value);
    worst = std::max(worst, diff);
    if (diff > 2.0 * static_cast<double>(k) * resolution || !InTargetSet(solver.point, 1e-9)) ++failures;
  }
  return {"support oracle vs y-grid", failures == 0, Summary(draws, failures, worst, "|h - h_grid|")};
}

CheckResult CheckSupportSolversAgree(int draws, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double worst = 0.0;
  SupportOptions pga;
  pga.solver = SupportSolver::kProjectedGradient;
  pga.tol = tol;
  for (int n = 0; n < draws; ++n) {
    const std::size_t k = 2 + static_cast<std::size_t>(rng() % 5);
    const DualWeight w = RandomDualWeight(k, rng);
    const double exact = HValue(w);
    double ascent = 0.0;
    try {
      ascent = HValue(w, pga);
    } catch (const SupportNonConvergence& e) {
      ascent = e.best().h_value;
    }
    // The exact solver may only be beaten by rounding.
    const double diff = exact - ascent;
    worst = std::max(worst, std::abs(diff));
    if (diff > tol || diff < -1e-12) ++failures;
  }
  return {"exact support solver vs projected gradient", failures == 0,
          Summary(draws, failures, worst, "|h_exact - h_pga|")};
}

CheckResult CheckBlackwellCondition(int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int n = 0; n < draws; ++n) {
    const std::size_t k = PickK(rng);
    const DualWeight w = RandomDualWeight(k, rng);
    const double gap = HValue(w) - ComputeAllocation(w).value;
    worst = std::min(worst, gap);
    if (gap < -1e-6) ++failures;
  }
  return {"Blackwell condition h_S(w) >= V(w)", failures == 0, Summary(draws, failures, worst, "min gap")};
}

CheckResult CheckHyperbolicRewrite(int draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  const HyperbolicSides tight = EvaluateHyperbolicSides(1.0, 1.0, 1.0);
  const HyperbolicSides loose = EvaluateHyperbolicSides(1.0, 1.0, 0.5);
  if (!(tight.product_form && tight.cone_form)) ++failures;
  if (loose.product_form || loose.cone_form) ++failures;
  for (int n = 0; n < draws; ++n) {
    const double x = 2.0 * Uniform(rng);
    const double y = 2.0 * Uniform(rng);
    const double z = 2.0 * Uniform(rng);
    if (!HyperbolicRewriteCheck(x, y, z)) ++failures;
  }
  std::ostringstream detail;
  detail << draws << " random triples plus 2 boundary triples, " << failures << " disagreements";
  return {"hyperbolic constraint rewrite", failures == 0, detail.str()};
}

CheckResult CheckSocpRoundTrip(int draws, double resolution, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  int checked = 0;
  double worst = 0.0;
  for (int attempt = 0; checked < draws && attempt < 50 * draws; ++attempt) {
    const std::size_t k = PickK(rng);
    const DualWeight w = RandomDualWeight(k, rng);
    const SupportResult grid = GridSupportOracle(w, resolution);
    if (std::any_of(grid.point.y.begin(), grid.point.y.end(), [](double v) { return v == 0.0; })) {
      continue;
    }
    ++checked;
    const SocpProblem problem = BuildSocpData(w);
    const double violation = CheckSocpPoint(problem, LiftToSocpVariables(grid.point)).max();
    worst = std::max(worst, violation);
    if (violation > 1e-9) ++failures;
  }
  if (checked < draws) ++failures;
  return {"SOCP data round-trip", failures == 0, Summary(checked, failures, worst, "violation")};
}

CheckResult CheckEgRegret(const std::vector<std::size_t>& dims, std::size_t horizon,
                          const std::vector<std::uint64_t>& seeds) {
  int runs = 0;
  int failures = 0;
  double worst_ratio = 0.0;
  for (std::size_t d : dims) {
    for (std::uint64_t seed : seeds) {
      for (int adversary = 0; adversary < 2; ++adversary) {
        std::mt19937_64 rng(seed);
        Vector signs(d);
        for (double& s : signs) s = (rng() & 1) ? 1.0 : -1.0;
        EgLearner learner(d, DefaultEta(d, horizon));
        L1BallRegret regret(d);
        Vector cost(d);
        for (std::size_t t = 1; t <= horizon; ++t) {
          const Vector w = learner.Predict();
          if (adversary == 0) {
            // Alternating sign around a seeded pattern.
            const double flip = (t % 2 == 0) ? 1.0 : -1.0;
            for (std::size_t i = 0; i < d; ++i) cost[i] = flip * signs[i];
          } else {
            // Track the prediction sign; coin flips where it is zero.
            for (std::size_t i = 0; i < d; ++i) {
              if (w[i] > 0.0) {
                cost[i] = 1.0;
              } else if (w[i] < 0.0) {
                cost[i] = -1.0;
              } else {
                cost[i] = (rng() & 1) ? 1.0 : -1.0;
              }
            }
          }
          regret.Record(w, cost);
          learner.Update(cost);
        }
        const double bound = EgRegretBound(d, horizon);
        worst_ratio = std::max(worst_ratio, regret.regret() / bound);
        ++runs;
        if (regret.regret() > bound) ++failures;
      }
    }
  }
  return {"EG+- regret within sqrt(2 T ln 2d)", failures == 0,
          Summary(runs, failures, worst_ratio, "regret/bound")};
}

std::vector<CheckResult> RunSelfTest(std::uint64_t seed) {
  return {
      CheckCStarAgainstGrid(500, 1e-3, 5e-3, seed),
      CheckAllocationAgainstGrid(200, 1e-3, seed + 1),
      CheckAllocationAgainstLp(200, seed + 2),
      CheckSupportAgainstGrid(200, 1e-2, seed + 3),
      CheckSupportSolversAgree(200, 1e-6, seed + 4),
      CheckBlackwellCondition(500, seed + 5),
      CheckHyperbolicRewrite(100000, seed + 6),
      CheckSocpRoundTrip(100, 1e-2, seed + 7),
      CheckEgRegret({2, 10, 50}, 10000, {1, 2, 3, 4, 5}),
  };
}

}  // namespace olb
