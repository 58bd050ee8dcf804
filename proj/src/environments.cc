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

#include "olb/environments.h"

#include <utility>

#include "olb/error.h"

namespace olb {

LoadVector IidUniformEnvironment::NextLoad(std::size_t, const Allocation&) {
  Vector l(k_);
  for (double& v : l) v = rng_.Uniform();
  return LoadVector(std::move(l));
}

BernoulliEnvironment::BernoulliEnvironment(std::vector<double> rates, std::uint64_t seed)
    : rates_(std::move(rates)), rng_(seed) {
  if (rates_.empty()) throw DimensionError("bernoulli environment needs at least one rate");
  for (double r : rates_) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("bernoulli rates must lie in [0,1]");
  }
}

LoadVector BernoulliEnvironment::NextLoad(std::size_t, const Allocation&) {
  Vector l(rates_.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = rng_.Uniform() < rates_[i] ? 1.0 : 0.0;
  return LoadVector(std::move(l));
}

RotatingSpikeEnvironment::RotatingSpikeEnvironment(std::size_t k, std::size_t period)
    : k_(k), period_(period) {
  if (k == 0) throw DimensionError("rotating spike needs K >= 1");
  if (period == 0) throw DomainError("rotating spike period must be >= 1");
}

LoadVector RotatingSpikeEnvironment::NextLoad(std::size_t t, const Allocation&) {
  if (t == 0) throw DomainError("rounds are numbered from 1");
  Vector l(k_, 0.0);
  l[((t - 1) / period_) % k_] = 1.0;
  return LoadVector(std::move(l));
}

LoadVector AdaptiveTargetedEnvironment::NextLoad(std::size_t, const Allocation& alpha) {
  if (alpha.size() != k_) throw DimensionError("allocation dimension differs from K");
  std::size_t target = 0;
  for (std::size_t i = 1; i < k_; ++i) {
    if (alpha[i] > alpha[target]) target = i;
  }
  Vector l(k_, 0.0);
  l[target] = 1.0;
  return LoadVector(std::move(l));
}

ScriptedEnvironment::ScriptedEnvironment(std::vector<LoadVector> loads) : loads_(std::move(loads)) {
  if (loads_.empty()) throw DimensionError("scripted environment needs at least one load");
  for (const LoadVector& l : loads_) {
    if (l.size() != loads_.front().size()) throw DimensionError("scripted loads differ in size");
  }
}

LoadVector ScriptedEnvironment::NextLoad(std::size_t t, const Allocation&) {
  if (t == 0) throw DomainError("rounds are numbered from 1");
  return loads_[(t - 1) % loads_.size()];
}

}  // namespace olb
