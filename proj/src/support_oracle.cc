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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "olb/norms.h"

namespace olb {
namespace {

struct Reduced {
  double positive_mass;  // P = sum_i max(0, w1_i)
  const Vector* w2;

  double Value(const Vector& y) const { return positive_mass * CStarInf(y) + Dot(*w2, y); }

  // Gradient for y > 0: P * (C*(y) / y_j)^2 + w2_j.
  Vector Gradient(const Vector& y) const {
    const double h = CStarInf(y);
    Vector g(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double r = h / y[j];
      g[j] = positive_mass * r * r + (*w2)[j];
    }
    return g;
  }
};

SupportResult Assemble(const DualWeight& w, Vector y) {
  const std::size_t k = w.dim();
  const double h = CStarInf(y);
  Vector x(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    if (w.w1[i] > 0.0) x[i] = h;
  }
  SupportResult out;
  out.h_value = Dot(w.w1, x) + Dot(w.w2, y);
  out.point = TargetPoint{std::move(x), std::move(y)};
  return out;
}

// Best point of the face where C*(y) = 0: y_j = 1 exactly where w2_j > 0.
SupportResult DegenerateFace(const DualWeight& w) {
  Vector y(w.dim());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = w.w2[j] > 0.0 ? 1.0 : 0.0;
  return Assemble(w, std::move(y));
}

double PositiveMass(const DualWeight& w) {
  double p = 0.0;
  for (double v : w.w1) p += std::max(0.0, v);
  return p;
}

SupportResult SolveExact(const DualWeight& w) {
  const std::size_t k = w.dim();
  const double p = PositiveMass(w);
  SupportResult degenerate = DegenerateFace(w);
  if (p == 0.0) return degenerate;

  // u_j = sqrt(-w2_j / P) on servers with w2_j < 0, zero elsewhere. An interior
  // KKT point exists iff sum_j u_j < 1, with h solving sum_j max(h, u_j) = 1.
  Vector u(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    if (w.w2[j] < 0.0) u[j] = std::sqrt(-w.w2[j] / p);
  }
  const double u_sum = std::accumulate(u.begin(), u.end(), 0.0);
  if (u_sum >= 1.0) return degenerate;

  Vector sorted = u;
  std::sort(sorted.begin(), sorted.end());
  // suffix[m] = sum of sorted[m..k)
  Vector suffix(k + 1, 0.0);
  for (std::size_t m = k; m-- > 0;) suffix[m] = suffix[m + 1] + sorted[m];
  double h = 0.0;
  for (std::size_t m = 1; m <= k; ++m) {
    // m smallest entries sit below h, the rest above.
    const double candidate = (1.0 - suffix[m]) / static_cast<double>(m);
    const bool above_lower = candidate >= sorted[m - 1];
    const bool below_upper = m == k || candidate <= sorted[m];
    if (above_lower && below_upper) {
      h = candidate;
      break;
    }
  }
  Vector y(k, 1.0);
  for (std::size_t j = 0; j < k; ++j) {
    if (u[j] > 0.0) y[j] = std::min(1.0, h / u[j]);
  }
  SupportResult interior = Assemble(w, std::move(y));
  return interior.h_value >= degenerate.h_value ? interior : degenerate;
}

// Upper bound on max F - F(y) over the closed box [0,1]^K from linearisation.
// F is concave, continuous up to the faces and 1-homogeneous, so F + gap is
// sum_j max(0, grad_j) and stays a valid bound when the optimum sits at y = 0.
double FrankWolfeGap(const Vector& y, const Vector& grad) {
  double gap = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    gap += std::max(grad[j] * (1.0 - y[j]), -grad[j] * y[j]);
  }
  return gap;
}

struct AscentOutcome {
  Vector y;
  double value;
  double gap;
};

// Ascent on [lo, 1]^K, lo > 0 keeping the gradient defined. Stops once the
// certificate is within tol of the run's value or of `floor`, the value of the
// degenerate candidate.
AscentOutcome Ascend(const Reduced& f, Vector y, double lo, double floor, const SupportOptions& options) {
  constexpr double kArmijo = 1e-4;
  double step = 1.0;
  double value = f.Value(y);
  for (int it = 0; it < options.max_iterations; ++it) {
    const Vector grad = f.Gradient(y);
    const double gap = FrankWolfeGap(y, grad);
    if (value + gap <= std::max(value, floor) + options.tol) return {std::move(y), value, gap};

    step = std::min(step * 2.0, 1e6);
    for (;;) {
      Vector next(y.size());
      double ascent = 0.0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        next[j] = std::clamp(y[j] + step * grad[j], lo, 1.0);
        ascent += grad[j] * (next[j] - y[j]);
      }
      const double next_value = f.Value(next);
      if (next_value >= value + kArmijo * ascent) {
        y = std::move(next);
        value = next_value;
        break;
      }
      step *= 0.5;
      if (step < 1e-300) {
        // Numerically stationary.
        return {std::move(y), value, gap};
      }
    }
  }
  const Vector grad = f.Gradient(y);
  const double gap = FrankWolfeGap(y, grad);
  return {std::move(y), value, gap};
}

SupportResult SolveProjectedGradient(const DualWeight& w, const SupportOptions& options) {
  const std::size_t k = w.dim();
  const double p = PositiveMass(w);
  SupportResult degenerate = DegenerateFace(w);
  if (p == 0.0) return degenerate;

  const Reduced f{p, &w.w2};
  const double lo = 1e-3 * options.tol;
  std::mt19937_64 rng(options.seed);
  std::vector<Vector> starts;
  starts.emplace_back(k, 1.0);
  for (int r = 0; r < options.random_restarts; ++r) {
    Vector y(k);
    // Uniform on [0.05, 1) from the top 53 bits.
    for (double& v : y) v = 0.05 + 0.95 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    starts.push_back(std::move(y));
  }

  SupportResult best = degenerate;
  // Certified upper bound on the optimum over all runs.
  double upper = std::numeric_limits<double>::infinity();
  for (Vector& start : starts) {
    AscentOutcome run = Ascend(f, std::move(start), lo, degenerate.h_value, options);
    upper = std::min(upper, run.value + run.gap);
    SupportResult candidate = Assemble(w, std::move(run.y));
    if (candidate.h_value > best.h_value) best = std::move(candidate);
  }
  if (best.h_value + options.tol < upper) {
    throw SupportNonConvergence("projected gradient ascent did not certify the support value",
                                std::move(best));
  }
  return best;
}

void ValidateOptions(const SupportOptions& options) {
  if (!(options.tol > 0.0 && options.tol <= 1e-3)) {
    throw DomainError("support oracle tolerance must lie in (0, 1e-3]");
  }
}

}  // namespace

SupportResult SupportPointInf(const DualWeight& w, const SupportOptions& options) {
  w.Validate();
  ValidateOptions(options);
  switch (options.solver) {
    case SupportSolver::kExact:
      return SolveExact(w);
    case SupportSolver::kProjectedGradient:
      return SolveProjectedGradient(w, options);
  }
  throw DomainError("unknown support solver");
}

double HValue(const DualWeight& w, const SupportOptions& options) {
  return SupportPointInf(w, options).h_value;
}

SupportResult GridSupportOracle(const DualWeight& w, double resolution) {
  w.Validate();
  const std::size_t k = w.dim();
  if (k > 3) throw DomainError("grid support oracle supports K <= 3 only");
  if (!(resolution > 0.0 && resolution <= 1.0)) throw DomainError("grid resolution must be in (0,1]");
  const auto steps = static_cast<std::size_t>(std::llround(1.0 / resolution));
  const double p = PositiveMass(w);

  std::vector<std::size_t> index(k, 0);
  Vector y(k, 0.0);
  Vector best_y(k, 0.0);
  double best = -std::numeric_limits<double>::infinity();
  for (;;) {
    double inv_sum = 0.0;
    bool has_zero = false;
    double linear = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      y[j] = static_cast<double>(index[j]) / static_cast<double>(steps);
      if (index[j] == 0) {
        has_zero = true;
      } else {
        inv_sum += 1.0 / y[j];
      }
      linear += w.w2[j] * y[j];
    }
    const double value = (has_zero ? 0.0 : p / inv_sum) + linear;
    if (value > best) {
      best = value;
      best_y = y;
    }
    std::size_t j = 0;
    while (j < k && index[j] == steps) index[j++] = 0;
    if (j == k) break;
    ++index[j];
  }
  return Assemble(w, std::move(best_y));
}

bool InTargetSet(const TargetPoint& s, double tol) {
  if (s.x.empty() || s.x.size() != s.y.size()) return false;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (!(s.x[i] >= 0.0 && s.x[i] <= 1.0 && s.y[i] >= 0.0 && s.y[i] <= 1.0)) return false;
  }
  return LinfNorm(s.x) <= CStarInf(s.y) + tol;
}

HyperbolicSides EvaluateHyperbolicSides(double x, double y, double z) {
  return {x * x <= y * z && y >= 0.0 && z >= 0.0, std::hypot(2.0 * x, y - z) <= y + z};
}

bool HyperbolicRewriteCheck(double x, double y, double z) {
  const HyperbolicSides sides = EvaluateHyperbolicSides(x, y, z);
  return sides.product_form == sides.cone_form;
}

double AffineExpr::Evaluate(const std::vector<double>& v) const {
  double s = constant;
  for (const auto& [index, coef] : terms) s += coef * v.at(index);
  return s;
}

SocpProblem BuildSocpData(const DualWeight& w) {
  w.Validate();
  const std::size_t k = w.dim();
  SocpProblem problem;
  problem.k = k;
  problem.objective.assign(2 * k + k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    problem.objective[SocpProblem::XIndex(i)] = -w.w1[i];
    problem.objective[SocpProblem::YIndex(k, i)] = -w.w2[i];
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t xi = SocpProblem::XIndex(i);
      const std::size_t yj = SocpProblem::YIndex(k, j);
      const std::size_t zij = SocpProblem::ZIndex(k, i, j);
      problem.cones.push_back(ConeConstraint{
          i, j, AffineExpr{{{xi, 2.0}}, 0.0}, AffineExpr{{{yj, 1.0}, {zij, -1.0}}, 0.0},
          AffineExpr{{{yj, 1.0}, {zij, 1.0}}, 0.0}});
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    LinearEquality eq;
    eq.lhs.terms.emplace_back(SocpProblem::XIndex(i), 1.0);
    for (std::size_t j = 0; j < k; ++j) eq.lhs.terms.emplace_back(SocpProblem::ZIndex(k, i, j), -1.0);
    problem.equalities.push_back(std::move(eq));
  }
  for (std::size_t i = 0; i < k; ++i) problem.boxes.push_back({SocpProblem::XIndex(i), 0.0, 1.0});
  for (std::size_t j = 0; j < k; ++j) problem.boxes.push_back({SocpProblem::YIndex(k, j), 0.0, 1.0});
  return problem;
}

double SocpViolation::max() const { return std::max({cone, equality, box}); }

SocpViolation CheckSocpPoint(const SocpProblem& problem, const std::vector<double>& v) {
  if (v.size() != problem.num_variables()) throw DimensionError("SOCP point has wrong length");
  SocpViolation out;
  for (const ConeConstraint& c : problem.cones) {
    const double lhs = std::hypot(c.u.Evaluate(v), c.v.Evaluate(v));
    out.cone = std::max(out.cone, lhs - c.bound.Evaluate(v));
  }
  for (const LinearEquality& e : problem.equalities) {
    out.equality = std::max(out.equality, std::abs(e.lhs.Evaluate(v) - e.rhs));
  }
  for (const BoxConstraint& b : problem.boxes) {
    const double value = v[b.variable];
    out.box = std::max({out.box, b.lower - value, value - b.upper});
  }
  return out;
}

std::vector<double> LiftToSocpVariables(const TargetPoint& s) {
  const std::size_t k = s.x.size();
  if (k == 0 || s.y.size() != k) throw DimensionError("target point halves must match");
  std::vector<double> v(2 * k + k * k, 0.0);
  double inv_sum = 0.0;
  for (double y : s.y) {
    if (!(y > 0.0)) throw DomainError("lifting requires every y_j > 0");
    inv_sum += 1.0 / y;
  }
  for (std::size_t i = 0; i < k; ++i) {
    v[SocpProblem::XIndex(i)] = s.x[i];
    v[SocpProblem::YIndex(k, i)] = s.y[i];
    for (std::size_t j = 0; j < k; ++j) {
      v[SocpProblem::ZIndex(k, i, j)] = s.x[i] * (1.0 / s.y[j]) / inv_sum;
    }
  }
  return v;
}

namespace {

nlohmann::json ToJson(const AffineExpr& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [index, coef] : e.terms) terms.push_back({index, coef});
  return {{"terms", terms}, {"constant", e.constant}};
}

}  // namespace

std::string SocpProblemToJson(const SocpProblem& problem) {
  nlohmann::json doc;
  doc["k"] = problem.k;
  doc["num_variables"] = problem.num_variables();
  doc["objective"] = problem.objective;
  doc["cones"] = nlohmann::json::array();
  for (const ConeConstraint& c : problem.cones) {
    doc["cones"].push_back({{"i", c.i},
                            {"j", c.j},
                            {"u", ToJson(c.u)},
                            {"v", ToJson(c.v)},
                            {"bound", ToJson(c.bound)}});
  }
  doc["equalities"] = nlohmann::json::array();
  for (const LinearEquality& e : problem.equalities) {
    doc["equalities"].push_back({{"lhs", ToJson(e.lhs)}, {"rhs", e.rhs}});
  }
  doc["boxes"] = nlohmann::json::array();
  for (const BoxConstraint& b : problem.boxes) {
    doc["boxes"].push_back({{"variable", b.variable}, {"lower", b.lower}, {"upper", b.upper}});
  }
  return doc.dump(2);
}

}  // namespace olb
