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

#include "olb/reduction.h"

#include <utility>

#include "olb/error.h"

namespace olb {

SplitLearner::SplitLearner(std::unique_ptr<OnlineLinearLearner> first,
                           std::unique_ptr<OnlineLinearLearner> second)
    : first_(std::move(first)), second_(std::move(second)) {}

SplitLearner::SplitLearner(const SplitLearner& other)
    : first_(other.first_->Clone()), second_(other.second_->Clone()) {}

Vector SplitLearner::Predict() const {
  Vector w = first_->Predict();
  const Vector tail = second_->Predict();
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

void SplitLearner::Update(std::span<const double> cost) {
  if (cost.size() != dim()) throw DimensionError("SplitLearner: cost has the wrong dimension");
  first_->Update(cost.first(first_->dim()));
  second_->Update(cost.subspan(first_->dim()));
}

std::unique_ptr<OnlineLinearLearner> SplitLearner::Clone() const {
  return std::make_unique<SplitLearner>(*this);
}

DualWeight LinfLoadBalancingGame::Split(const Vector& w) const {
  if (w.size() != 2 * k_) throw DimensionError("dual weight must have 2K entries");
  const auto mid = w.begin() + static_cast<std::ptrdiff_t>(k_);
  return DualWeight{Vector(w.begin(), mid), Vector(mid, w.end())};
}

Allocation LinfLoadBalancingGame::Witness(const Vector& w) const {
  return ComputeAllocation(Split(w)).alpha;
}

Vector LinfLoadBalancingGame::Payoff(const Allocation& alpha, const LoadVector& load) const {
  if (alpha.size() != k_ || load.size() != k_) throw DimensionError("payoff dimension mismatch");
  Vector r(2 * k_);
  for (std::size_t i = 0; i < k_; ++i) {
    r[i] = alpha[i] * load[i];
    r[k_ + i] = load[i];
  }
  return r;
}

Vector LinfLoadBalancingGame::Support(const Vector& w) const {
  const SupportResult s = SupportPointInf(Split(w), options_);
  Vector out = s.point.x;
  out.insert(out.end(), s.point.y.begin(), s.point.y.end());
  return out;
}

namespace {

std::unique_ptr<OnlineLinearLearner> MakeTwoCopyEg(const EngineConfig& config) {
  const double eta = config.eta.value_or(DefaultEta(config.k, config.horizon));
  return std::make_unique<SplitLearner>(std::make_unique<EgLearner>(config.k, eta),
                                        std::make_unique<EgLearner>(config.k, eta));
}

}  // namespace

GenericLinfPlayer::GenericLinfPlayer(const EngineConfig& config)
    : k_(config.k),
      support_options_(config.support),
      reduction_(LinfLoadBalancingGame(config.k, config.support), MakeTwoCopyEg(config)),
      regret1_(config.k),
      regret2_(config.k) {}

RoundRecord GenericLinfPlayer::PlayRound(std::size_t t, Environment& env) {
  RoundRecord rec;
  rec.t = t;
  try {
    rec.alpha = reduction_.Begin();
    rec.w = reduction_.game().Split(reduction_.current_weight());
    rec.game_value = GameValue(rec.w, rec.alpha);
    rec.load = env.NextLoad(t, rec.alpha);

    const RoundLoss loss = reduction_.Finish(rec.alpha, rec.load);
    const SupportResult support = SupportPointInf(rec.w, support_options_);
    rec.support = support.point;
    rec.support_value = support.h_value;
    rec.blackwell_gap = rec.support_value - rec.game_value;

    const auto mid = loss.subgradient.begin() + static_cast<std::ptrdiff_t>(k_);
    rec.g1.assign(loss.subgradient.begin(), mid);
    rec.g2.assign(mid, loss.subgradient.end());
    regret1_.Record(rec.w.w1, rec.g1);
    regret2_.Record(rec.w.w2, rec.g2);
    rec.olo_regret_1 = regret1_.regret();
    rec.olo_regret_2 = regret2_.regret();
  } catch (const OracleError& e) {
    throw OracleError("round " + std::to_string(t) + ": " + e.what());
  }
  BlackwellCheck(rec);
  return rec;
}

}  // namespace olb
