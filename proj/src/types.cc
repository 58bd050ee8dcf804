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

#include "olb/types.h"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "olb/error.h"

namespace olb {

LoadVector::LoadVector(Vector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("load vector must have K >= 1 entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double v = entries_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("load entry " + std::to_string(i) + " = " + std::to_string(v) +
                        " is outside [0,1]");
    }
  }
}

Allocation::Allocation(Vector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("allocation must have K >= 1 entries");
  double sum = 0.0;
  for (double v : entries_) {
    if (!(v >= 0.0)) throw DomainError("allocation entries must be non-negative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw DomainError("allocation entries sum to " + std::to_string(sum) + ", not 1");
  }
}

Allocation Allocation::Uniform(std::size_t k) {
  if (k == 0) throw DimensionError("allocation must have K >= 1 entries");
  return Allocation(Vector(k, 1.0 / static_cast<double>(k)));
}

Allocation Allocation::Normalized(Vector weights) {
  double sum = 0.0;
  for (double v : weights) {
    if (!(v >= 0.0)) throw DomainError("cannot normalise negative weights");
    sum += v;
  }
  if (!(sum > 0.0)) throw DomainError("cannot normalise a zero weight vector");
  for (double& v : weights) v /= sum;
  return Allocation(std::move(weights));
}

void DualWeight::Validate() const {
  if (w1.empty() || w1.size() != w2.size()) {
    throw DimensionError("dual weight halves must be non-empty and of equal length");
  }
  const double n1 = L1Norm(w1);
  const double n2 = L1Norm(w2);
  if (!(n1 <= 1.0 + kBallTolerance && n2 <= 1.0 + kBallTolerance)) {
    throw DomainError("dual weight lies outside the unit dual ball (|w1|_1 = " +
                      std::to_string(n1) + ", |w2|_1 = " + std::to_string(n2) + ")");
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  RequireSameSize(a, b, "dot product");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double L1Norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

void RequireSameSize(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace olb
