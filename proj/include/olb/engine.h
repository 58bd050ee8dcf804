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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olb/allocation_oracle.h"
#include "olb/olo.h"
#include "olb/support_oracle.h"
#include "olb/types.h"

namespace olb {

// Source of per-round loads. Sees the player's allocation for the round before
// answering, so adaptive adversaries are expressible; oblivious ones ignore it.
class Environment {
 public:
  virtual ~Environment() = default;
  virtual std::size_t dim() const = 0;
  // `t` is the 1-based round index.
  virtual LoadVector NextLoad(std::size_t t, const Allocation& alpha) = 0;
};

// Everything that happened in one round. Baseline players leave the reduction
// fields (w, support, g1, g2, gaps, OLO regrets) zero.
struct RoundRecord {
  std::size_t t = 0;
  DualWeight w;
  Allocation alpha;
  LoadVector load;
  TargetPoint support;
  Vector g1;
  Vector g2;
  double game_value = 0.0;     // V(w) = min over alpha of the worst-case payoff
  double support_value = 0.0;  // h_S(w)
  double blackwell_gap = 0.0;  // h_S(w) - V(w)
  Vector cum_player_load;      // sum_{s<=t} alpha_s (.) l_s
  Vector cum_load;             // sum_{s<=t} l_s
  double olo_regret_1 = 0.0;   // running L1-ball regret of the first learner copy
  double olo_regret_2 = 0.0;
};

class Player {
 public:
  virtual ~Player() = default;
  virtual std::string_view name() const = 0;
  // Plays round t. Fills everything except the cumulative load vectors.
  virtual RoundRecord PlayRound(std::size_t t, Environment& env) = 0;
};

struct EngineConfig {
  std::size_t k = 2;
  std::size_t horizon = 1;
  std::optional<double> eta;  // defaults to DefaultEta(k, horizon, 1)
  SupportOptions support;
};

// The OLO-based load balancer: two EG+- copies over the K-dimensional L1 ball
// produce the halves of the dual weight w_t; the allocation oracle answers
// with alpha_t; the support oracle gives s_t; and the learners are fed
//   g1 = -alpha_t (.) l_t + s_x,   g2 = -l_t + s_y.
class Algorithm1Engine final : public Player {
 public:
  explicit Algorithm1Engine(const EngineConfig& config);

  std::string_view name() const override { return "algorithm1"; }
  RoundRecord PlayRound(std::size_t t, Environment& env) override;

  double eta() const { return eta_; }
  const EgLearner& learner1() const { return learner1_; }
  const EgLearner& learner2() const { return learner2_; }

 private:
  std::size_t k_;
  double eta_;
  SupportOptions support_options_;
  EgLearner learner1_;
  EgLearner learner2_;
  L1BallRegret regret1_;
  L1BallRegret regret2_;
};

// One CSV row of a trace.
struct TraceRow {
  std::size_t t = 0;
  double regret = 0.0;
  double bound = 0.0;
  double blackwell_gap = 0.0;
  double makespan = 0.0;   // |cum_player_load|_inf
  double cstar_cum = 0.0;  // C*(cum_load)
  double olo_regret_1 = 0.0;
  double olo_regret_2 = 0.0;
};

struct RegretTrace {
  std::size_t k = 0;
  std::string player;
  std::vector<RoundRecord> rounds;  // empty unless requested
  std::vector<TraceRow> rows;

  std::size_t horizon() const { return rows.size(); }
  double final_regret() const { return rows.empty() ? 0.0 : rows.back().regret; }
  double olo_regret_1() const { return rows.empty() ? 0.0 : rows.back().olo_regret_1; }
  double olo_regret_2() const { return rows.empty() ? 0.0 : rows.back().olo_regret_2; }
  std::vector<double> regret_curve() const;
  std::vector<double> bound_curve() const;
};

// 2 sqrt(2 t ln 4K), the makespan regret guarantee of the EG+- instantiation.
double MakespanRegretBound(std::size_t k, std::size_t t);

// Regret after t rounds: |cum_player_load|_inf - C*(cum_load).
double RegretFromTotals(const Vector& cum_player_load, const Vector& cum_load);
// Regret of a trace at round t (0 for t = 0). Throws DomainError for t > T.
double Regret(const RegretTrace& trace, std::size_t t);

// h_S(w_t) - V(w_t) for a finished record. Throws OracleError with a dump of the
// round when the gap is below -1e-6.
double BlackwellCheck(const RoundRecord& record);

struct RunOptions {
  bool keep_rounds = false;
};

// Plays `horizon` rounds and accumulates regret and bound curves.
RegretTrace RunGame(std::size_t k, std::size_t horizon, Environment& env, Player& player,
                    const RunOptions& options = {});

// Bracket for the distance of the average payoff rbar = (x, y) to the target
// set in the combined norm |x|_inf + |y|_inf, computed by Frank-Wolfe on its
// dual form max over the dual ball of <rbar, w> - h_S(w).
struct DistanceBracket {
  double lower = 0.0;  // value at the best dual point found
  double upper = 0.0;  // smallest value-plus-gap certificate seen
};
DistanceBracket ApproachDistance(const Vector& rbar_x, const Vector& rbar_y, int iterations = 2000);

std::string DescribeRound(const RoundRecord& record);

}  // namespace olb
