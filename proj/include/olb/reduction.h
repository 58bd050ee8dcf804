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

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <utility>

#include "olb/allocation_oracle.h"
#include "olb/engine.h"
#include "olb/olo.h"
#include "olb/support_oracle.h"
#include "olb/types.h"

namespace olb {

// A repeated game with vector payoffs in R^d and a convex target set S, seen
// through the two oracles the reduction needs:
//   Witness(w):   an action a with <w, r(a, b)> <= h_S(w) for every outcome b
//   Support(w):   a maximiser of <s, w> over S, i.e. a subgradient of h_S at w
template <typename G>
concept ApproachabilityGame = requires(G& game, const Vector& w, const typename G::Action& a,
                                       const typename G::Outcome& b) {
  typename G::Action;
  typename G::Outcome;
  { game.payoff_dim() } -> std::convertible_to<std::size_t>;
  { game.Witness(w) } -> std::convertible_to<typename G::Action>;
  { game.Payoff(a, b) } -> std::convertible_to<Vector>;
  { game.Support(w) } -> std::convertible_to<Vector>;
};

// Loss handed to the OCO learner after a round: f_t(w) = <-r_t, w> + h_S(w),
// together with the subgradient -r_t + s*(w_t) at the played point.
struct RoundLoss {
  Vector payoff;      // r_t
  Vector subgradient; // -r_t + s*(w_t)
  std::function<double(const Vector&)> evaluate;
};

// Generic game-to-OCO reduction. The OCO learner is linearised: it only ever
// sees subgradients, which is all an OLO learner needs.
template <ApproachabilityGame Game>
class GenericReduction {
 public:
  using Action = typename Game::Action;
  using Outcome = typename Game::Outcome;

  GenericReduction(Game game, std::unique_ptr<OnlineLinearLearner> learner)
      : game_(std::move(game)), learner_(std::move(learner)) {}

  // Steps 1-2: take w_t from the learner and answer with a witness action.
  Action Begin() {
    w_ = learner_->Predict();
    return game_.Witness(w_);
  }

  // Steps 3-4: observe the outcome, build f_t and feed its subgradient.
  RoundLoss Finish(const Action& action, const Outcome& outcome) {
    RoundLoss loss;
    loss.payoff = game_.Payoff(action, outcome);
    const Vector s = game_.Support(w_);
    loss.subgradient.resize(loss.payoff.size());
    for (std::size_t i = 0; i < s.size(); ++i) loss.subgradient[i] = -loss.payoff[i] + s[i];
    learner_->Update(loss.subgradient);
    loss.evaluate = [game = &game_, payoff = loss.payoff](const Vector& w) {
      const Vector s_w = game->Support(w);
      double v = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) v += -payoff[i] * w[i] + s_w[i] * w[i];
      return v;
    };
    return loss;
  }

  const Vector& current_weight() const { return w_; }
  Game& game() { return game_; }
  const OnlineLinearLearner& learner() const { return *learner_; }

 private:
  Game game_;
  std::unique_ptr<OnlineLinearLearner> learner_;
  Vector w_;
};

// Product learner over R^K x R^K: one independent copy per half.
class SplitLearner final : public OnlineLinearLearner {
 public:
  SplitLearner(std::unique_ptr<OnlineLinearLearner> first, std::unique_ptr<OnlineLinearLearner> second);
  SplitLearner(const SplitLearner& other);

  std::size_t dim() const override { return first_->dim() + second_->dim(); }
  Vector Predict() const override;
  void Update(std::span<const double> cost) override;
  std::unique_ptr<OnlineLinearLearner> Clone() const override;

  const OnlineLinearLearner& first() const { return *first_; }
  const OnlineLinearLearner& second() const { return *second_; }

 private:
  std::unique_ptr<OnlineLinearLearner> first_;
  std::unique_ptr<OnlineLinearLearner> second_;
};

// The load balancing game: actions are allocations, outcomes are loads,
// r(alpha, l) = (alpha (.) l, l) and S is the L_inf target set.
class LinfLoadBalancingGame {
 public:
  using Action = Allocation;
  using Outcome = LoadVector;

  LinfLoadBalancingGame(std::size_t k, SupportOptions options) : k_(k), options_(options) {}

  std::size_t payoff_dim() const { return 2 * k_; }
  Allocation Witness(const Vector& w) const;
  Vector Payoff(const Allocation& alpha, const LoadVector& load) const;
  Vector Support(const Vector& w) const;

  DualWeight Split(const Vector& w) const;

 private:
  std::size_t k_;
  SupportOptions options_;
};

// Player backed by the generic reduction over the load balancing game, with
// two EG+- copies. Produces the same records as Algorithm1Engine.
class GenericLinfPlayer final : public Player {
 public:
  explicit GenericLinfPlayer(const EngineConfig& config);

  std::string_view name() const override { return "generic_reduction"; }
  RoundRecord PlayRound(std::size_t t, Environment& env) override;

 private:
  std::size_t k_;
  SupportOptions support_options_;
  GenericReduction<LinfLoadBalancingGame> reduction_;
  L1BallRegret regret1_;
  L1BallRegret regret2_;
};

}  // namespace olb
