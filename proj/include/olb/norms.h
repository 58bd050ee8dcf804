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

#include <span>

#include "olb/types.h"

namespace olb {

// max_i |v_i|. Throws DimensionError on an empty vector.
double LinfNorm(std::span<const double> v);

// (sum_i |v_i|^p)^(1/p) for p >= 1, evaluated with max-scaling.
double LpNorm(std::span<const double> v, double p);

// Offline optimum C*(l) = min over the simplex of |alpha (.) l|_inf.
//
// Closed form 1 / sum_j (1/l_j); zero when any l_j is zero. Accepts any
// non-negative vector (cumulative loads included), not only [0,1]^K.
double CStarInf(std::span<const double> l);
inline double CStarInf(const LoadVector& l) { return CStarInf(l.values()); }

// Allocation attaining CStarInf: alpha_i proportional to 1/l_i, or uniform over
// the zero-load servers when there are any.
Allocation CStarMinimizerInf(std::span<const double> l);
inline Allocation CStarMinimizerInf(const LoadVector& l) { return CStarMinimizerInf(l.values()); }

// Experimental L_p optimum (sum_i y_i^-q)^(-1/q), q = p/(p-1). Zero if some y_i is 0.
double CStarP(std::span<const double> y, double p);

// Minimiser of |alpha (.) y|_p over the simplex: alpha_i proportional to y_i^-q.
Allocation CStarMinimizerP(std::span<const double> y, double p);

// Norm family for the base norm on R^K.
class NormFamily {
 public:
  enum class Kind { kLinf, kLp };

  static NormFamily Linf() { return NormFamily(Kind::kLinf, 0.0); }
  // Experimental. Throws DomainError unless p > 1.
  static NormFamily Lp(double p);

  Kind kind() const { return kind_; }
  double p() const { return p_; }

  double Norm(std::span<const double> v) const;
  double DualNorm(std::span<const double> v) const;
  double CStar(std::span<const double> y) const;
  Allocation CStarMinimizer(std::span<const double> y) const;

 private:
  NormFamily(Kind kind, double p) : kind_(kind), p_(p) {}

  Kind kind_;
  double p_;
};

// |(x, y)|^+ = |x| + |y| on R^K x R^K.
double CombinedNorm(std::span<const double> x, std::span<const double> y, const NormFamily& family);

// Dual of the combined norm: max(|w1|_*, |w2|_*).
double DualCombinedNorm(std::span<const double> w1, std::span<const double> w2,
                        const NormFamily& family);

}  // namespace olb
