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
#include <memory>
#include <span>

#include "olb/types.h"

namespace olb {

// Online linear optimisation over a fixed decision set: predict w_t, pay
// <g_t, w_t>, receive g_t.
class OnlineLinearLearner {
 public:
  virtual ~OnlineLinearLearner() = default;

  virtual std::size_t dim() const = 0;
  virtual Vector Predict() const = 0;
  virtual void Update(std::span<const double> cost) = 0;
  virtual std::unique_ptr<OnlineLinearLearner> Clone() const = 0;
};

// EG+- over the L1 unit ball in R^d: positive and negative weight copies
// share one normaliser, so the prediction w+ - w- has L1 norm at most one.
// Weights are kept as logarithms; the normaliser is a log-sum-exp.
class EgState {
 public:
  // Throws DomainError unless dim >= 1, eta > 0 and cost_bound > 0.
  EgState(std::size_t dim, double eta, double cost_bound = 1.0);

  std::size_t dim() const { return log_plus_.size(); }
  double eta() const { return eta_; }
  double cost_bound() const { return cost_bound_; }

  Vector w_plus() const;
  Vector w_minus() const;
  std::span<const double> log_plus() const { return log_plus_; }
  std::span<const double> log_minus() const { return log_minus_; }

  friend bool operator==(const EgState&, const EgState&) = default;

 private:
  friend Vector EgPredict(const EgState& state);
  friend EgState EgUpdate(EgState state, std::span<const double> cost);

  Vector log_plus_;
  Vector log_minus_;
  double eta_;
  double cost_bound_;
};

// w+ = w- = 1/(2 dim): joint mass one, first prediction zero.
EgState EgInit(std::size_t dim, double eta, double cost_bound = 1.0);
Vector EgPredict(const EgState& state);
// Multiplicative step w+ *= exp(-eta g), w- *= exp(eta g), then renormalise.
// Throws DomainError if |g|_inf exceeds the cost bound (plus 1e-9).
EgState EgUpdate(EgState state, std::span<const double> cost);

// (1/M) sqrt(2 ln(2 dim) / T), the rate that yields EgRegretBound.
double DefaultEta(std::size_t dim, std::size_t horizon, double cost_bound = 1.0);
// M sqrt(2 T ln(2 dim)).
double EgRegretBound(std::size_t dim, std::size_t horizon, double cost_bound = 1.0);

class EgLearner final : public OnlineLinearLearner {
 public:
  explicit EgLearner(EgState state) : state_(std::move(state)) {}
  EgLearner(std::size_t dim, double eta, double cost_bound = 1.0)
      : state_(EgInit(dim, eta, cost_bound)) {}

  std::size_t dim() const override { return state_.dim(); }
  Vector Predict() const override { return EgPredict(state_); }
  void Update(std::span<const double> cost) override { state_ = EgUpdate(std::move(state_), cost); }
  std::unique_ptr<OnlineLinearLearner> Clone() const override {
    return std::make_unique<EgLearner>(*this);
  }

  const EgState& state() const { return state_; }

 private:
  EgState state_;
};

// Regret against the best fixed point of the L1 unit ball:
//   sum_t <g_t, w_t> - min_{|u|_1 <= 1} sum_t <g_t, u>
// where the minimum sits at a signed basis vector and equals -|sum_t g_t|_inf.
class L1BallRegret {
 public:
  explicit L1BallRegret(std::size_t dim) : cost_sum_(dim, 0.0) {}

  void Record(std::span<const double> prediction, std::span<const double> cost);
  double learner_loss() const { return learner_loss_; }
  double comparator_loss() const;
  double regret() const { return learner_loss_ - comparator_loss(); }
  const Vector& cost_sum() const { return cost_sum_; }

 private:
  Vector cost_sum_;
  double learner_loss_ = 0.0;
};

// Experimental p-norm learner: cumulative negated costs theta and the link
//   w_i = eta sgn(theta_i) |theta_i|^(p-1) / |theta|_p^(p-2).
struct PnormState {
  Vector theta;
  double p;
  double eta;

  static PnormState Init(std::size_t dim, double p, double eta);
};

Vector PnormPredict(const PnormState& state);
PnormState PnormUpdate(PnormState state, std::span<const double> cost);

// Link image rescaled onto the unit ball of the dual exponent q = p/(p-1)
// when it falls outside; `clipped` reports whether that happened.
struct ClippedPrediction {
  Vector w;
  bool clipped = false;
};
ClippedPrediction PnormPredictClipped(const PnormState& state);

}  // namespace olb
