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
#include <string>
#include <utility>
#include <vector>

#include "olb/error.h"
#include "olb/types.h"

namespace olb {

// Support-point step of the reduction for the L_inf target set
//
//   S = {(x, y) in [0,1]^K x [0,1]^K : |x|_inf <= C*(y)}.
//
// Any maximiser s of <s, w> over S is a subgradient of the support function
// h_S at w. Because the objective is linear in x, the maximiser puts
// x_i = C*(y) on every server with w1_i > 0 and x_i = 0 elsewhere; what is
// left is the concave box-constrained program
//
//   max_y  P * C*(y) + <w2, y>,   P = sum_i max(0, w1_i).
struct SupportResult {
  TargetPoint point;
  double h_value = 0.0;  // <point, w>
};

enum class SupportSolver {
  // KKT characterisation of the reduced program: stationarity gives
  // y_j = min(1, h * sqrt(P / -w2_j)) with h = C*(y), and consistency reduces
  // to a scalar piecewise-linear equation solved after one sort.
  kExact,
  // Multi-start projected gradient ascent with Armijo backtracking, stopped
  // once the Frank-Wolfe gap certifies the objective to within `tol`.
  kProjectedGradient,
};

struct SupportOptions {
  double tol = 1e-6;
  SupportSolver solver = SupportSolver::kExact;
  int random_restarts = 8;
  int max_iterations = 50000;  // per start, projected gradient only
  std::uint64_t seed = 0;
};

// Raised by the projected gradient solver when no start reaches the requested
// certificate within the iteration budget. Carries the best feasible point.
class SupportNonConvergence : public OracleError {
 public:
  SupportNonConvergence(const std::string& what, SupportResult best)
      : OracleError(what), best_(std::move(best)) {}
  const SupportResult& best() const { return best_; }

 private:
  SupportResult best_;
};

// Throws DomainError unless tol is in (0, 1e-3] and w is a valid dual weight.
SupportResult SupportPointInf(const DualWeight& w, const SupportOptions& options = {});
double HValue(const DualWeight& w, const SupportOptions& options = {});

// Exhaustive maximum over the y-grid of [0,1]^K with x from the rule above.
// Refuses K > 3 with DomainError. Test oracle.
SupportResult GridSupportOracle(const DualWeight& w, double resolution);

// |x|_inf <= C*(y) + tol with both halves inside [0,1]^K.
bool InTargetSet(const TargetPoint& s, double tol = 1e-9);

// The two sides of the hyperbolic-constraint rewrite for one (x, y, z) triple:
//   x^2 <= y z, y >= 0, z >= 0      and      |(2x, y - z)|_2 <= y + z.
struct HyperbolicSides {
  bool product_form;
  bool cone_form;
};
HyperbolicSides EvaluateHyperbolicSides(double x, double y, double z);
// True iff both sides agree on the triple.
bool HyperbolicRewriteCheck(double x, double y, double z);

// Second-order cone program equivalent to the support problem, over the
// variables (x_1..x_K, y_1..y_K, z_11..z_1K, ..., z_K1..z_KK):
//
//   min  <-(w1, w2, 0), v>
//   s.t. |(2 x_i, y_j - z_ij)|_2 <= y_j + z_ij   for all i, j
//        x_i - sum_j z_ij = 0                    for all i
//        0 <= x_i <= 1, 0 <= y_j <= 1.
struct AffineExpr {
  std::vector<std::pair<std::size_t, double>> terms;  // (variable, coefficient)
  double constant = 0.0;

  double Evaluate(const std::vector<double>& v) const;
};

struct ConeConstraint {
  std::size_t i;
  std::size_t j;
  AffineExpr u;      // 2 x_i
  AffineExpr v;      // y_j - z_ij
  AffineExpr bound;  // y_j + z_ij
};

struct LinearEquality {
  AffineExpr lhs;
  double rhs = 0.0;
};

struct BoxConstraint {
  std::size_t variable;
  double lower;
  double upper;
};

struct SocpProblem {
  std::size_t k = 0;
  std::vector<double> objective;
  std::vector<ConeConstraint> cones;
  std::vector<LinearEquality> equalities;
  std::vector<BoxConstraint> boxes;

  std::size_t num_variables() const { return objective.size(); }
  static std::size_t XIndex(std::size_t i) { return i; }
  static std::size_t YIndex(std::size_t k, std::size_t j) { return k + j; }
  static std::size_t ZIndex(std::size_t k, std::size_t i, std::size_t j) { return 2 * k + i * k + j; }
};

SocpProblem BuildSocpData(const DualWeight& w);

// Largest constraint violation of `v` (zero when feasible).
struct SocpViolation {
  double cone = 0.0;
  double equality = 0.0;
  double box = 0.0;
  double max() const;
};
SocpViolation CheckSocpPoint(const SocpProblem& problem, const std::vector<double>& v);

// Lifts a target point with every y_j > 0 to SOCP variables using
// z_ij = x_i * (1/y_j) / sum_k (1/y_k).
std::vector<double> LiftToSocpVariables(const TargetPoint& s);

// JSON document with fields `k`, `num_variables`, `objective`, `cones`,
// `equalities` and `boxes` for external conic solvers.
std::string SocpProblemToJson(const SocpProblem& problem);

}  // namespace olb
