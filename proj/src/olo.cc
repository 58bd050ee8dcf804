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

#include "olb/olo.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "olb/error.h"
#include "olb/norms.h"

namespace olb {
namespace {

constexpr double kCostSlack = 1e-9;

double LogSumExp(std::span<const double> a, std::span<const double> b) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : a) m = std::max(m, v);
  for (double v : b) m = std::max(m, v);
  double s = 0.0;
  for (double v : a) s += std::exp(v - m);
  for (double v : b) s += std::exp(v - m);
  return m + std::log(s);
}

}  // namespace

EgState::EgState(std::size_t dim, double eta, double cost_bound)
    : log_plus_(dim), log_minus_(dim), eta_(eta), cost_bound_(cost_bound) {
  if (dim == 0) throw DomainError("EG+- requires dim >= 1");
  if (!(eta > 0.0)) throw DomainError("EG+- requires eta > 0");
  if (!(cost_bound > 0.0)) throw DomainError("EG+- requires a positive cost bound");
  const double init = -std::log(2.0 * static_cast<double>(dim));
  std::fill(log_plus_.begin(), log_plus_.end(), init);
  std::fill(log_minus_.begin(), log_minus_.end(), init);
}

Vector EgState::w_plus() const {
  Vector out(log_plus_.size());
  std::transform(log_plus_.begin(), log_plus_.end(), out.begin(), [](double v) { return std::exp(v); });
  return out;
}

Vector EgState::w_minus() const {
  Vector out(log_minus_.size());
  std::transform(log_minus_.begin(), log_minus_.end(), out.begin(), [](double v) { return std::exp(v); });
  return out;
}

EgState EgInit(std::size_t dim, double eta, double cost_bound) { return EgState(dim, eta, cost_bound); }

Vector EgPredict(const EgState& state) {
  Vector w(state.dim());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(state.log_plus_[i]) - std::exp(state.log_minus_[i]);
  }
  return w;
}

EgState EgUpdate(EgState state, std::span<const double> cost) {
  if (cost.size() != state.dim()) throw DimensionError("EG+- cost has the wrong dimension");
  for (double g : cost) {
    if (!(std::abs(g) <= state.cost_bound_ + kCostSlack)) {
      throw DomainError("EG+- cost entry " + std::to_string(g) + " exceeds the cost bound");
    }
  }
  for (std::size_t i = 0; i < cost.size(); ++i) {
    state.log_plus_[i] -= state.eta_ * cost[i];
    state.log_minus_[i] += state.eta_ * cost[i];
  }
  const double norm = LogSumExp(state.log_plus_, state.log_minus_);
  for (double& v : state.log_plus_) v -= norm;
  for (double& v : state.log_minus_) v -= norm;
  return state;
}

double DefaultEta(std::size_t dim, std::size_t horizon, double cost_bound) {
  if (dim == 0 || horizon == 0 || !(cost_bound > 0.0)) {
    throw DomainError("DefaultEta requires positive dim, horizon and cost bound");
  }
  return std::sqrt(2.0 * std::log(2.0 * static_cast<double>(dim)) / static_cast<double>(horizon)) /
         cost_bound;
}

double EgRegretBound(std::size_t dim, std::size_t horizon, double cost_bound) {
  if (dim == 0) throw DomainError("EgRegretBound requires dim >= 1");
  return cost_bound *
         std::sqrt(2.0 * static_cast<double>(horizon) * std::log(2.0 * static_cast<double>(dim)));
}

void L1BallRegret::Record(std::span<const double> prediction, std::span<const double> cost) {
  RequireSameSize(prediction, cost, "L1BallRegret");
  if (cost.size() != cost_sum_.size()) throw DimensionError("L1BallRegret: wrong dimension");
  learner_loss_ += Dot(prediction, cost);
  for (std::size_t i = 0; i < cost.size(); ++i) cost_sum_[i] += cost[i];
}

double L1BallRegret::comparator_loss() const { return -LinfNorm(cost_sum_); }

PnormState PnormState::Init(std::size_t dim, double p, double eta) {
  if (dim == 0) throw DomainError("p-norm learner requires dim >= 1");
  if (!(p >= 2.0)) throw DomainError("p-norm learner requires p >= 2");
  if (!(eta > 0.0)) throw DomainError("p-norm learner requires eta > 0");
  return PnormState{Vector(dim, 0.0), p, eta};
}

Vector PnormPredict(const PnormState& state) {
  Vector w(state.theta.size(), 0.0);
  const double norm = LpNorm(state.theta, state.p);
  if (norm == 0.0) return w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double t = state.theta[i];
    // |t|^(p-1) / |theta|^(p-2) = |theta| * (|t| / |theta|)^(p-1), which stays finite.
    const double magnitude = norm * std::pow(std::abs(t) / norm, state.p - 1.0);
    w[i] = state.eta * (t < 0.0 ? -magnitude : magnitude);
  }
  return w;
}

PnormState PnormUpdate(PnormState state, std::span<const double> cost) {
  if (cost.size() != state.theta.size()) throw DimensionError("p-norm cost has the wrong dimension");
  for (std::size_t i = 0; i < cost.size(); ++i) state.theta[i] -= cost[i];
  return state;
}

ClippedPrediction PnormPredictClipped(const PnormState& state) {
  ClippedPrediction out{PnormPredict(state), false};
  const double q = state.p / (state.p - 1.0);
  const double norm = LpNorm(out.w, q);
  if (norm > 1.0) {
    for (double& v : out.w) v /= norm;
    out.clipped = true;
  }
  return out;
}

}  // namespace olb
