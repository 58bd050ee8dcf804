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

#include "olb/dense_simplex.h"

#include <cmath>
#include <cstddef>
#include <limits>

#include "olb/error.h"

namespace olb {
namespace {

// Tableau with one row per constraint plus an objective row (reduced costs
// stored as c_j - z_j). The last column is the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  double& objective() { return at(rows_, cols_); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  void Pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Runs Bland's-rule iterations over columns [0, active_cols). Returns false
  // when the objective is unbounded below.
  bool Optimize(std::size_t active_cols, double tol) {
    for (;;) {
      std::size_t enter = active_cols;
      for (std::size_t c = 0; c < active_cols; ++c) {
        if (cost(c) < -tol) {
          enter = c;
          break;
        }
      }
      if (enter == active_cols) return true;
      std::size_t leave = rows_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double coef = at(r, enter);
        if (coef <= tol) continue;
        const double ratio = rhs(r) / coef;
        if (ratio < best_ratio - tol ||
            (std::abs(ratio - best_ratio) <= tol && leave < rows_ && basis_[r] < basis_[leave])) {
          best_ratio = ratio;
          leave = r;
        }
      }
      if (leave == rows_) return false;
      Pivot(leave, enter);
    }
  }

  std::size_t rows() const { return rows_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LinearProgramSolution SolveDenseSimplex(const LinearProgram& lp, double tolerance) {
  const std::size_t m = lp.b.size();
  const std::size_t n = lp.c.size();
  if (lp.a.size() != m) throw DimensionError("SolveDenseSimplex: row count mismatch");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw DimensionError("SolveDenseSimplex: column count mismatch");
  }

  // Columns: n structural variables followed by m artificials.
  Tableau t(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = lp.b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = sign * lp.a[r][c];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * lp.b[r];
    t.basis(r) = n + r;
  }

  // Phase 1: minimise the sum of artificials.
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) t.cost(c) -= t.at(r, c);
    t.objective() -= t.rhs(r);
  }
  t.Optimize(n + m, tolerance);
  LinearProgramSolution out;
  if (-t.objective() > std::sqrt(tolerance)) {
    out.status = LinearProgramSolution::Status::kInfeasible;
    return out;
  }
  // Drive remaining artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis(r) < n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (std::abs(t.at(r, c)) > tolerance) {
        t.Pivot(r, c);
        break;
      }
    }
  }

  // Phase 2: install the true objective and forbid artificial columns.
  for (std::size_t c = 0; c <= n + m; ++c) t.at(m, c) = 0.0;
  for (std::size_t c = 0; c < n; ++c) t.cost(c) = lp.c[c];
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bc = t.basis(r);
    if (bc >= n) continue;
    const double cb = lp.c[bc];
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= n + m; ++c) t.at(m, c) -= cb * t.at(r, c);
  }
  if (!t.Optimize(n, tolerance)) {
    out.status = LinearProgramSolution::Status::kUnbounded;
    return out;
  }

  out.status = LinearProgramSolution::Status::kOptimal;
  out.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis(r) < n) out.x[t.basis(r)] = t.rhs(r);
  }
  out.objective = 0.0;
  for (std::size_t c = 0; c < n; ++c) out.objective += lp.c[c] * out.x[c];
  return out;
}

}  // namespace olb
