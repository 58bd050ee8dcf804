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

#include <cstddef>
#include <span>
#include <vector>

namespace olb {

using Vector = std::vector<double>;

// Per-server load condition l in [0,1]^K: computation time per unit of data.
class LoadVector {
 public:
  LoadVector() = default;
  // Throws DimensionError for K = 0 and DomainError for entries outside [0,1].
  explicit LoadVector(Vector entries);

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const { return entries_; }
  const Vector& vector() const { return entries_; }

  friend bool operator==(const LoadVector&, const LoadVector&) = default;

 private:
  Vector entries_;
};

// A point of the probability simplex: the fraction of data sent to each server.
class Allocation {
 public:
  static constexpr double kSumTolerance = 1e-12;

  Allocation() = default;
  // Throws DimensionError for K = 0 and DomainError if the entries are not a
  // probability vector within kSumTolerance.
  explicit Allocation(Vector entries);

  static Allocation Uniform(std::size_t k);
  // Renormalises a non-negative vector with positive mass onto the simplex.
  static Allocation Normalized(Vector weights);

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const { return entries_; }
  const Vector& vector() const { return entries_; }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  Vector entries_;
};

// Direction w = (w1, w2) of the dual ball max(|w1|_1, |w2|_1) <= 1.
struct DualWeight {
  static constexpr double kBallTolerance = 1e-9;

  Vector w1;
  Vector w2;

  std::size_t dim() const { return w1.size(); }
  // Throws DimensionError / DomainError unless the pair lies in the dual ball.
  void Validate() const;
  static DualWeight Zero(std::size_t k) { return {Vector(k, 0.0), Vector(k, 0.0)}; }

  friend bool operator==(const DualWeight&, const DualWeight&) = default;
};

// A point s = (x, y) of the target set S.
struct TargetPoint {
  Vector x;
  Vector y;

  friend bool operator==(const TargetPoint&, const TargetPoint&) = default;
};

double Dot(std::span<const double> a, std::span<const double> b);
double L1Norm(std::span<const double> v);
void RequireSameSize(std::span<const double> a, std::span<const double> b, const char* what);

}  // namespace olb
