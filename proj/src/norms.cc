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

#include "olb/norms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "olb/error.h"

namespace olb {
namespace {

void RequireNonEmpty(std::span<const double> v, const char* what) {
  if (v.empty()) throw DimensionError(std::string(what) + ": empty vector");
}

void RequireNonNegative(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!(x >= 0.0)) throw DomainError(std::string(what) + ": entries must be non-negative");
  }
}

double DualExponent(double p) { return p / (p - 1.0); }

}  // namespace

double LinfNorm(std::span<const double> v) {
  RequireNonEmpty(v, "LinfNorm");
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double LpNorm(std::span<const double> v, double p) {
  RequireNonEmpty(v, "LpNorm");
  if (!(p >= 1.0)) throw DomainError("LpNorm: p must be >= 1");
  if (std::isinf(p)) return LinfNorm(v);
  const double scale = LinfNorm(v);
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

double CStarInf(std::span<const double> l) {
  RequireNonEmpty(l, "CStarInf");
  RequireNonNegative(l, "CStarInf");
  double inv_sum = 0.0;
  for (double v : l) {
    if (v == 0.0) return 0.0;
    inv_sum += 1.0 / v;
  }
  return 1.0 / inv_sum;
}

Allocation CStarMinimizerInf(std::span<const double> l) {
  RequireNonEmpty(l, "CStarMinimizerInf");
  RequireNonNegative(l, "CStarMinimizerInf");
  const auto zeros = std::count(l.begin(), l.end(), 0.0);
  Vector alpha(l.size());
  if (zeros > 0) {
    for (std::size_t i = 0; i < l.size(); ++i) alpha[i] = l[i] == 0.0 ? 1.0 : 0.0;
  } else {
    for (std::size_t i = 0; i < l.size(); ++i) alpha[i] = 1.0 / l[i];
  }
  return Allocation::Normalized(std::move(alpha));
}

double CStarP(std::span<const double> y, double p) {
  RequireNonEmpty(y, "CStarP");
  RequireNonNegative(y, "CStarP");
  if (!(p > 1.0)) throw DomainError("CStarP: p must be > 1");
  const double smallest = *std::min_element(y.begin(), y.end());
  if (smallest == 0.0) return 0.0;
  const double q = DualExponent(p);
  // Scale by the smallest entry so every term lies in (0, 1].
  double s = 0.0;
  for (double v : y) s += std::pow(smallest / v, q);
  return smallest * std::pow(s, -1.0 / q);
}

Allocation CStarMinimizerP(std::span<const double> y, double p) {
  RequireNonEmpty(y, "CStarMinimizerP");
  RequireNonNegative(y, "CStarMinimizerP");
  if (!(p > 1.0)) throw DomainError("CStarMinimizerP: p must be > 1");
  const double smallest = *std::min_element(y.begin(), y.end());
  if (smallest == 0.0) return CStarMinimizerInf(y);
  const double q = DualExponent(p);
  Vector alpha(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) alpha[i] = std::pow(smallest / y[i], q);
  return Allocation::Normalized(std::move(alpha));
}

NormFamily NormFamily::Lp(double p) {
  if (!(p > 1.0)) throw DomainError("L_p family requires p > 1");
  return NormFamily(Kind::kLp, p);
}

double NormFamily::Norm(std::span<const double> v) const {
  return kind_ == Kind::kLinf ? LinfNorm(v) : LpNorm(v, p_);
}

double NormFamily::DualNorm(std::span<const double> v) const {
  if (kind_ == Kind::kLinf) {
    RequireNonEmpty(v, "DualNorm");
    return L1Norm(v);
  }
  return LpNorm(v, DualExponent(p_));
}

double NormFamily::CStar(std::span<const double> y) const {
  return kind_ == Kind::kLinf ? CStarInf(y) : CStarP(y, p_);
}

Allocation NormFamily::CStarMinimizer(std::span<const double> y) const {
  return kind_ == Kind::kLinf ? CStarMinimizerInf(y) : CStarMinimizerP(y, p_);
}

double CombinedNorm(std::span<const double> x, std::span<const double> y, const NormFamily& family) {
  RequireSameSize(x, y, "CombinedNorm");
  return family.Norm(x) + family.Norm(y);
}

double DualCombinedNorm(std::span<const double> w1, std::span<const double> w2,
                        const NormFamily& family) {
  RequireSameSize(w1, w2, "DualCombinedNorm");
  return std::max(family.DualNorm(w1), family.DualNorm(w2));
}

}  // namespace olb
