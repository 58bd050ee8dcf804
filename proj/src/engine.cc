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

#include "olb/engine.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "olb/error.h"
#include "olb/norms.h"

namespace olb {
namespace {

constexpr double kGapTolerance = 1e-6;

std::string Join(const Vector& v) {
  std::ostringstream out;
  out.precision(17);
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace

Algorithm1Engine::Algorithm1Engine(const EngineConfig& config)
    : k_(config.k),
      eta_(config.eta.value_or(DefaultEta(config.k, config.horizon))),
      support_options_(config.support),
      learner1_(config.k, eta_),
      learner2_(config.k, eta_),
      regret1_(config.k),
      regret2_(config.k) {}

RoundRecord Algorithm1Engine::PlayRound(std::size_t t, Environment& env) {
  RoundRecord rec;
  rec.t = t;
  try {
    rec.w = DualWeight{learner1_.Predict(), learner2_.Predict()};

    AllocationResult allocation = ComputeAllocation(rec.w);
    rec.alpha = std::move(allocation.alpha);
    rec.game_value = allocation.value;

    rec.load = env.NextLoad(t, rec.alpha);
    if (rec.load.size() != k_) throw DimensionError("environment returned a load of wrong size");

    SupportResult support = SupportPointInf(rec.w, support_options_);
    rec.support = std::move(support.point);
    rec.support_value = support.h_value;
    rec.blackwell_gap = rec.support_value - rec.game_value;

    rec.g1.resize(k_);
    rec.g2.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      rec.g1[i] = -(rec.alpha[i] * rec.load[i]) + rec.support.x[i];
      rec.g2[i] = -rec.load[i] + rec.support.y[i];
    }

    regret1_.Record(rec.w.w1, rec.g1);
    regret2_.Record(rec.w.w2, rec.g2);
    learner1_.Update(rec.g1);
    learner2_.Update(rec.g2);
    rec.olo_regret_1 = regret1_.regret();
    rec.olo_regret_2 = regret2_.regret();
  } catch (const OracleError& e) {
    throw OracleError("round " + std::to_string(t) + ": " + e.what());
  }
  BlackwellCheck(rec);
  return rec;
}

std::vector<double> RegretTrace::regret_curve() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const TraceRow& r : rows) out.push_back(r.regret);
  return out;
}

std::vector<double> RegretTrace::bound_curve() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const TraceRow& r : rows) out.push_back(r.bound);
  return out;
}

double MakespanRegretBound(std::size_t k, std::size_t t) {
  if (k == 0) throw DomainError("MakespanRegretBound requires K >= 1");
  return 2.0 * std::sqrt(2.0 * static_cast<double>(t) * std::log(4.0 * static_cast<double>(k)));
}

double RegretFromTotals(const Vector& cum_player_load, const Vector& cum_load) {
  RequireSameSize(cum_player_load, cum_load, "RegretFromTotals");
  return LinfNorm(cum_player_load) - CStarInf(cum_load);
}

double Regret(const RegretTrace& trace, std::size_t t) {
  if (t == 0) return 0.0;
  if (t > trace.rows.size()) throw DomainError("Regret: round index beyond the horizon");
  return trace.rows[t - 1].regret;
}

double BlackwellCheck(const RoundRecord& record) {
  const double gap = record.support_value - record.game_value;
  if (gap < -kGapTolerance) {
    throw OracleError("Blackwell condition violated (gap " + std::to_string(gap) + ")\n" +
                      DescribeRound(record));
  }
  return gap;
}

RegretTrace RunGame(std::size_t k, std::size_t horizon, Environment& env, Player& player,
                    const RunOptions& options) {
  if (k == 0) throw DomainError("RunGame requires K >= 1");
  if (env.dim() != k) throw DimensionError("environment dimension differs from K");
  RegretTrace trace;
  trace.k = k;
  trace.player = std::string(player.name());
  trace.rows.reserve(horizon);
  if (options.keep_rounds) trace.rounds.reserve(horizon);

  Vector cum_player(k, 0.0);
  Vector cum_load(k, 0.0);
  for (std::size_t t = 1; t <= horizon; ++t) {
    RoundRecord rec = player.PlayRound(t, env);
    for (std::size_t i = 0; i < k; ++i) {
      cum_player[i] += rec.alpha[i] * rec.load[i];
      cum_load[i] += rec.load[i];
    }
    TraceRow row;
    row.t = t;
    row.makespan = LinfNorm(cum_player);
    row.cstar_cum = CStarInf(cum_load);
    row.regret = row.makespan - row.cstar_cum;
    row.bound = MakespanRegretBound(k, t);
    row.blackwell_gap = rec.blackwell_gap;
    row.olo_regret_1 = rec.olo_regret_1;
    row.olo_regret_2 = rec.olo_regret_2;
    trace.rows.push_back(row);
    if (options.keep_rounds) {
      rec.cum_player_load = cum_player;
      rec.cum_load = cum_load;
      trace.rounds.push_back(std::move(rec));
    }
  }
  return trace;
}

DistanceBracket ApproachDistance(const Vector& rbar_x, const Vector& rbar_y, int iterations) {
  RequireSameSize(rbar_x, rbar_y, "ApproachDistance");
  const std::size_t k = rbar_x.size();
  DualWeight w = DualWeight::Zero(k);
  DistanceBracket out;
  out.lower = -std::numeric_limits<double>::infinity();
  out.upper = std::numeric_limits<double>::infinity();

  // Linear maximiser over one L1 ball: the signed basis vector of the largest
  // gradient entry.
  auto vertex = [](const Vector& grad) {
    Vector v(grad.size(), 0.0);
    std::size_t best = 0;
    for (std::size_t i = 1; i < grad.size(); ++i) {
      if (std::abs(grad[i]) > std::abs(grad[best])) best = i;
    }
    v[best] = grad[best] >= 0.0 ? 1.0 : -1.0;
    return v;
  };

  for (int it = 0; it < iterations; ++it) {
    const SupportResult s = SupportPointInf(w);
    const double value = Dot(rbar_x, w.w1) + Dot(rbar_y, w.w2) - s.h_value;
    Vector grad1(k), grad2(k);
    for (std::size_t i = 0; i < k; ++i) {
      grad1[i] = rbar_x[i] - s.point.x[i];
      grad2[i] = rbar_y[i] - s.point.y[i];
    }
    const Vector v1 = vertex(grad1);
    const Vector v2 = vertex(grad2);
    double gap = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      gap += grad1[i] * (v1[i] - w.w1[i]) + grad2[i] * (v2[i] - w.w2[i]);
    }
    out.lower = std::max(out.lower, value);
    out.upper = std::min(out.upper, value + std::max(0.0, gap));
    if (gap <= 1e-12) break;
    const double step = 2.0 / (static_cast<double>(it) + 2.0);
    for (std::size_t i = 0; i < k; ++i) {
      w.w1[i] += step * (v1[i] - w.w1[i]);
      w.w2[i] += step * (v2[i] - w.w2[i]);
    }
  }
  return out;
}

std::string DescribeRound(const RoundRecord& r) {
  std::ostringstream out;
  out.precision(17);
  out << "round " << r.t << "\n"
      << "  w1      " << Join(r.w.w1) << "\n"
      << "  w2      " << Join(r.w.w2) << "\n"
      << "  alpha   " << Join(r.alpha.vector()) << "\n"
      << "  load    " << Join(r.load.vector()) << "\n"
      << "  s.x     " << Join(r.support.x) << "\n"
      << "  s.y     " << Join(r.support.y) << "\n"
      << "  g1      " << Join(r.g1) << "\n"
      << "  g2      " << Join(r.g2) << "\n"
      << "  V(w)    " << r.game_value << "\n"
      << "  h_S(w)  " << r.support_value << "\n";
  return out.str();
}

}  // namespace olb
