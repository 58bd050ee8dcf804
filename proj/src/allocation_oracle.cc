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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "olb/dense_simplex.h"
#include "olb/error.h"

namespace olb {
namespace {

void RequireMatching(const DualWeight& w, const Allocation& alpha) {
  if (w.w1.size() != w.w2.size() || w.w1.size() != alpha.size()) {
    throw DimensionError("dual weight and allocation dimensions differ");
  }
}

// One linear piece of max(0, a*alpha + b) restricted to [0,1].
struct Piece {
  double slope;
  double length;
  std::size_t server;
  int order;  // position within the server's pieces
};

void AppendPieces(double a, double b, std::size_t server, std::vector<Piece>& pieces) {
  if (a == 0.0) {
    pieces.push_back({0.0, 1.0, server, 0});
    return;
  }
  const double kink = -b / a;
  if (kink <= 0.0 || kink >= 1.0) {
    // One piece: active on the whole interval iff a*alpha + b > 0 there.
    const bool active = a > 0.0 ? kink <= 0.0 : kink >= 1.0;
    pieces.push_back({active ? a : 0.0, 1.0, server, 0});
    return;
  }
  if (a > 0.0) {
    pieces.push_back({0.0, kink, server, 0});
    pieces.push_back({a, 1.0 - kink, server, 1});
  } else {
    pieces.push_back({a, kink, server, 0});
    pieces.push_back({0.0, 1.0 - kink, server, 1});
  }
}

}  // namespace

double GameValue(const DualWeight& w, const Allocation& alpha) {
  RequireMatching(w, alpha);
  double v = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    v += std::max(0.0, w.w1[i] * alpha[i] + w.w2[i]);
  }
  return v;
}

LoadVector WorstCaseLoad(const DualWeight& w, const Allocation& alpha) {
  RequireMatching(w, alpha);
  Vector l(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    l[i] = w.w1[i] * alpha[i] + w.w2[i] > 0.0 ? 1.0 : 0.0;
  }
  return LoadVector(std::move(l));
}

AllocationResult ComputeAllocation(const DualWeight& w) {
  w.Validate();
  const std::size_t k = w.dim();
  if (std::all_of(w.w1.begin(), w.w1.end(), [](double v) { return v == 0.0; })) {
    Allocation uniform = Allocation::Uniform(k);
    const double value = GameValue(w, uniform);
    return {std::move(uniform), value};
  }

  std::vector<Piece> pieces;
  pieces.reserve(2 * k);
  for (std::size_t i = 0; i < k; ++i) AppendPieces(w.w1[i], w.w2[i], i, pieces);
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& lhs, const Piece& rhs) {
    if (lhs.slope != rhs.slope) return lhs.slope < rhs.slope;
    if (lhs.server != rhs.server) return lhs.server < rhs.server;
    return lhs.order < rhs.order;
  });

  Vector alpha(k, 0.0);
  double remaining = 1.0;
  for (const Piece& piece : pieces) {
    if (remaining <= 0.0) break;
    const double take = std::min(piece.length, remaining);
    alpha[piece.server] += take;
    remaining -= take;
  }
  Allocation result = Allocation::Normalized(std::move(alpha));
  const double value = GameValue(w, result);
  return {std::move(result), value};
}

AllocationResult ComputeAllocationLp(const DualWeight& w) {
  w.Validate();
  const std::size_t k = w.dim();
  // Columns: alpha (k), beta (k), surplus (k).
  //   beta_i - w1_i alpha_i - surplus_i = w2_i
  //   sum_i alpha_i = 1
  const std::size_t n = 3 * k;
  LinearProgram lp;
  lp.c.assign(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) lp.c[k + i] = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> row(n, 0.0);
    row[i] = -w.w1[i];
    row[k + i] = 1.0;
    row[2 * k + i] = -1.0;
    lp.a.push_back(std::move(row));
    lp.b.push_back(w.w2[i]);
  }
  std::vector<double> simplex_row(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) simplex_row[i] = 1.0;
  lp.a.push_back(std::move(simplex_row));
  lp.b.push_back(1.0);

  const LinearProgramSolution sol = SolveDenseSimplex(lp);
  if (sol.status != LinearProgramSolution::Status::kOptimal) {
    throw OracleError("allocation LP did not reach an optimal basis");
  }
  Vector alpha(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(k));
  for (double& a : alpha) a = std::max(0.0, a);
  Allocation result = Allocation::Normalized(std::move(alpha));
  const double value = GameValue(w, result);
  return {std::move(result), value};
}

AllocationResult GridAllocationOracle(const DualWeight& w, double resolution) {
  w.Validate();
  const std::size_t k = w.dim();
  if (k > 4) throw DomainError("grid allocation oracle supports K <= 4 only");
  if (!(resolution > 0.0 && resolution <= 1.0)) throw DomainError("grid resolution must be in (0,1]");
  const auto steps = static_cast<long>(std::llround(1.0 / resolution));

  std::vector<long> counts(k, 0);
  double best_value = std::numeric_limits<double>::infinity();
  Vector best;
  Vector alpha(k);
  // Enumerate compositions of `steps` into k non-negative parts.
  std::function<void(std::size_t, long)> visit = [&](std::size_t i, long left) {
    if (i + 1 == k) {
      counts[i] = left;
      for (std::size_t j = 0; j < k; ++j) alpha[j] = static_cast<double>(counts[j]) / steps;
      double v = 0.0;
      for (std::size_t j = 0; j < k; ++j) v += std::max(0.0, w.w1[j] * alpha[j] + w.w2[j]);
      if (v < best_value) {
        best_value = v;
        best = alpha;
      }
      return;
    }
    for (long c = 0; c <= left; ++c) {
      counts[i] = c;
      visit(i + 1, left - c);
    }
  };
  visit(0, steps);
  return {Allocation::Normalized(std::move(best)), best_value};
}

}  // namespace olb
