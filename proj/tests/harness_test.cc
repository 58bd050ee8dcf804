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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "olb/config.h"
#include "olb/environments.h"
#include "olb/error.h"
#include "olb/experiment.h"
#include "olb/norms.h"
#include "olb/players.h"
#include "olb/trace_io.h"

namespace olb {
namespace {

std::vector<LoadVector> Draw(Environment& env, std::size_t n) {
  std::vector<LoadVector> out;
  const Allocation alpha = Allocation::Uniform(env.dim());
  for (std::size_t t = 1; t <= n; ++t) out.push_back(env.NextLoad(t, alpha));
  return out;
}

TEST(IidUniformTest, ReproducibleInRangeAndCentred) {
  IidUniformEnvironment a(3, 5), b(3, 5), c(3, 6);
  const auto la = Draw(a, 10000);
  EXPECT_EQ(la, Draw(b, 10000));
  EXPECT_NE(la, Draw(c, 10000));
  double sum = 0.0;
  for (const LoadVector& l : la) {
    for (double v : l.values()) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
    sum += l[0];
  }
  EXPECT_GE(sum / 10000, 0.49);
  EXPECT_LE(sum / 10000, 0.51);
}

TEST(RotatingSpikeTest, Examples) {
  RotatingSpikeEnvironment env(2, 1);
  EXPECT_EQ(Draw(env, 3), (std::vector<LoadVector>{LoadVector({1, 0}), LoadVector({0, 1}), LoadVector({1, 0})}));

  for (std::size_t period : {1u, 3u, 7u}) {
    RotatingSpikeEnvironment spike(4, period);
    Vector cum(4, 0.0);
    for (const LoadVector& l : Draw(spike, 4 * period)) {
      for (std::size_t i = 0; i < 4; ++i) cum[i] += l[i];
    }
    EXPECT_EQ(cum, Vector(4, static_cast<double>(period)));
    EXPECT_NEAR(CStarInf(cum), static_cast<double>(period) / 4, 1e-12);
  }
  EXPECT_THROW(RotatingSpikeEnvironment(2, 0), DomainError);
}

TEST(AdaptiveTargetedTest, Examples) {
  AdaptiveTargetedEnvironment env(2);
  EXPECT_EQ(env.NextLoad(1, Allocation({0.6, 0.4})), LoadVector({1, 0}));
  EXPECT_EQ(env.NextLoad(2, Allocation::Uniform(2)), LoadVector({1, 0}));
  EXPECT_EQ(env.NextLoad(3, Allocation({0.2, 0.8})), LoadVector({0, 1}));
}

TEST(AdaptiveTargetedTest, StaticUniformRegretGrowsLinearly) {
  AdaptiveTargetedEnvironment env(4);
  StaticPlayer player(Allocation::Uniform(4));
  const RegretTrace trace = RunGame(4, 1000, env, player);
  for (const TraceRow& row : trace.rows) {
    EXPECT_NEAR(row.makespan, static_cast<double>(row.t) / 4, 1e-9);
    EXPECT_EQ(row.cstar_cum, 0.0);
    EXPECT_NEAR(row.regret, static_cast<double>(row.t) / 4, 1e-9);
  }
}

TEST(BernoulliTest, RatesAndDeterminism) {
  BernoulliEnvironment fixed({0.0, 1.0}, 3);
  for (const LoadVector& l : Draw(fixed, 50)) EXPECT_EQ(l, LoadVector({0, 1}));
  BernoulliEnvironment a({0.3, 0.7}, 9), b({0.3, 0.7}, 9);
  const auto la = Draw(a, 20000);
  EXPECT_EQ(la, Draw(b, 20000));
  double ones = 0.0;
  for (const LoadVector& l : la) ones += l[1];
  EXPECT_NEAR(ones / 20000, 0.7, 0.02);
}

TEST(HindsightFollowerTest, ConstantEnvironment) {
  const LoadVector l({0.2, 0.3, 0.6});
  ScriptedEnvironment env({l});
  HindsightFollowerPlayer player(3);
  const RegretTrace trace = RunGame(3, 50, env, player, {.keep_rounds = true});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(trace.rounds[0].alpha[i], 1.0 / 3, 1e-15);
  const Allocation best = CStarMinimizerInf(l);
  for (std::size_t t = 1; t < 50; ++t) {
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(trace.rounds[t].alpha[i], best[i], 1e-7);
  }
}

TEST(HindsightFollowerTest, OscillatesOnRotatingSpike) {
  RotatingSpikeEnvironment env(2, 1);
  HindsightFollowerPlayer player(2);
  const RegretTrace trace = RunGame(2, 6, env, player, {.keep_rounds = true});
  // Cumulative loads (1,0), (1,1), (2,1) before rounds 2, 3, 4.
  EXPECT_NEAR(trace.rounds[1].alpha[1], 1.0, 1e-6);
  EXPECT_NEAR(trace.rounds[2].alpha[0], 0.5, 1e-6);
  EXPECT_NEAR(trace.rounds[3].alpha[1], 2.0 / 3, 1e-6);
  for (const RoundRecord& r : trace.rounds) {
    EXPECT_NEAR(r.alpha[0] + r.alpha[1], 1.0, 1e-12);
  }
}

TEST(EnvSpecTest, ParseAndPrint) {
  EXPECT_EQ(EnvSpec::Parse("iid_uniform").kind, EnvSpec::Kind::kIidUniform);
  EXPECT_EQ(EnvSpec::Parse("adaptive_targeted").kind, EnvSpec::Kind::kAdaptiveTargeted);
  const EnvSpec spike = EnvSpec::Parse("rotating_spike(5)");
  EXPECT_EQ(spike.kind, EnvSpec::Kind::kRotatingSpike);
  EXPECT_EQ(spike.period, 5u);
  EXPECT_EQ(EnvSpec::Parse("rotating_spike").period, 1u);
  const EnvSpec bern = EnvSpec::Parse("bernoulli(0.2, 0.8)");
  EXPECT_EQ(bern.rates, (std::vector<double>{0.2, 0.8}));
  for (const char* text : {"iid_uniform", "rotating_spike(3)", "bernoulli(0.25,0.5)", "adaptive_targeted"}) {
    EXPECT_EQ(EnvSpec::Parse(EnvSpec::Parse(text).ToString()).ToString(), EnvSpec::Parse(text).ToString());
  }
  for (const char* bad : {"", "uniform", "bernoulli", "bernoulli(x)", "rotating_spike(1,2)", "iid_uniform(3)",
                          "rotating_spike(-1)", "rotating_spike(2"}) {
    EXPECT_THROW(EnvSpec::Parse(bad), ConfigError) << bad;
  }
}

TEST(GameConfigTest, Validate) {
  GameConfig c;
  c.k = 1;
  EXPECT_THROW(c.Validate(), ConfigError);
  c.k = 2;
  c.t = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c.t = 10;
  c.tol = 0.0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c.tol = 1e-2;
  EXPECT_THROW(c.Validate(), ConfigError);
  c.tol = 1e-3;
  EXPECT_NO_THROW(c.Validate());
  c.env = EnvSpec::Parse("bernoulli(0.1,0.2,0.3)");
  EXPECT_THROW(c.Validate(), ConfigError);
  c.env = EnvSpec::Parse("bernoulli(0.4)");
  EXPECT_NO_THROW(c.Validate());
  c.eta_override = -1.0;
  EXPECT_THROW(c.Validate(), ConfigError);
}

TEST(GameConfigTest, JsonRoundTripAndOverrides) {
  GameConfig c;
  c.k = 10;
  c.t = 200;
  c.seed = 18446744073709551615ull;
  c.env = EnvSpec::Parse("rotating_spike(2)");
  c.player = PlayerKind::kHindsightFollower;
  c.eta_override = 0.25;
  c.tol = 1e-5;
  c.out_path = "trace.csv";
  const GameConfig back = GameConfigFromJson(GameConfigToJson(c));
  EXPECT_EQ(GameConfigToJson(back), GameConfigToJson(c));
  EXPECT_EQ(back.seed, c.seed);

  const GameConfig partial = GameConfigFromJson(R"({"t": 7})", c);
  EXPECT_EQ(partial.t, 7u);
  EXPECT_EQ(partial.k, 10u);

  EXPECT_THROW(GameConfigFromJson(R"({"horizon": 7})"), ConfigError);
  EXPECT_THROW(GameConfigFromJson(R"({"k": -3})"), ConfigError);
  EXPECT_THROW(GameConfigFromJson(R"({"k": "two"})"), ConfigError);
  EXPECT_THROW(GameConfigFromJson("[1, 2]"), ConfigError);
  EXPECT_THROW(GameConfigFromJson("{"), ConfigError);
  EXPECT_THROW(LoadGameConfig("/nonexistent/config.json"), ConfigError);
  EXPECT_THROW(ParsePlayerKind("greedy"), ConfigError);
}

GameConfig SmallConfig() {
  GameConfig c;
  c.k = 3;
  c.t = 200;
  c.seed = 4;
  return c;
}

TEST(TraceCsvTest, SchemaAndDeterminism) {
  std::ostringstream a, b;
  WriteTraceCsv(RunConfig(SmallConfig()), a);
  WriteTraceCsv(RunConfig(SmallConfig()), b);
  EXPECT_EQ(a.str(), b.str());

  std::istringstream lines(a.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kTraceCsvHeader);
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 200u);
  EXPECT_EQ(a.str().back(), '\n');
}

TEST(TraceCsvTest, ReadBack) {
  const RegretTrace trace = RunConfig(SmallConfig());
  std::stringstream csv;
  WriteTraceCsv(trace, csv);
  const std::vector<TraceRow> rows = ReadTraceCsv(csv);
  ASSERT_EQ(rows.size(), trace.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].t, trace.rows[i].t);
    EXPECT_NEAR(rows[i].regret, trace.rows[i].regret, 1e-11 * std::max(1.0, std::abs(trace.rows[i].regret)));
    EXPECT_NEAR(rows[i].bound, trace.rows[i].bound, 1e-9);
  }
  std::istringstream bad_header("t,regret\n1,0\n");
  EXPECT_THROW(ReadTraceCsv(bad_header), ConfigError);
  std::istringstream bad_row(std::string(kTraceCsvHeader) + "\n1,2,3\n");
  EXPECT_THROW(ReadTraceCsv(bad_row), ConfigError);
  EXPECT_THROW(ReadTraceCsvFile("/nonexistent/trace.csv"), ConfigError);
}

TEST(TraceCsvTest, TwelveSignificantDigits) {
  EXPECT_EQ(FormatSignificant(1.0 / 3), "0.333333333333");
  EXPECT_EQ(FormatSignificant(768.2582330559366), "768.258233056");
  EXPECT_EQ(FormatSignificant(0.0), "0");
}

TEST(TraceJsonTest, HasOneRecordPerRound) {
  RunOptions options;
  options.keep_rounds = true;
  std::ostringstream out;
  WriteTraceJson(RunConfig(SmallConfig(), options), out);
  const nlohmann::json doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc.at("k"), 3);
  EXPECT_EQ(doc.at("player"), "algorithm1");
  ASSERT_EQ(doc.at("rounds").size(), 200u);
  EXPECT_EQ(doc.at("rounds")[199].at("t"), 200);
  EXPECT_EQ(doc.at("rounds")[0].at("alpha").size(), 3u);
}

TEST(CheckBoundTest, EmptyTraceAndKnownBound) {
  const BoundReport empty = CheckBound({});
  EXPECT_EQ(empty.bound, 0.0);
  EXPECT_EQ(empty.regret, 0.0);
  EXPECT_TRUE(empty.passed);
  EXPECT_TRUE(empty.chain_passed);

  TraceRow row;
  row.t = 20000;
  row.bound = MakespanRegretBound(10, 20000);
  row.regret = 800.0;
  row.olo_regret_1 = 400.0;
  row.olo_regret_2 = 399.99;
  const BoundReport r = CheckBound({row});
  EXPECT_NEAR(r.bound, 768.2582330559366, 1e-9);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.chain_passed);
  EXPECT_NE(FormatBoundReport(r).find("FAIL"), std::string::npos);
}

TEST(SweepTest, RowsFollowHorizonsAndSlope) {
  GameConfig base = SmallConfig();
  base.env = EnvSpec::Parse("rotating_spike");
  const std::vector<std::size_t> horizons{400, 100, 1600};
  const std::vector<SweepRow> rows = RunSweep(base, horizons, 3);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(rows[i].horizon, horizons[i]);
    base.t = horizons[i];
    EXPECT_EQ(rows[i].regret, RunConfig(base).final_regret());
    EXPECT_NEAR(rows[i].ratio, rows[i].regret / rows[i].bound, 1e-15);
  }
  std::ostringstream csv;
  WriteSweepCsv(rows, csv);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "T,regret,bound,ratio");

  std::vector<SweepRow> synthetic;
  for (std::size_t t : {10u, 100u, 1000u}) synthetic.push_back({t, std::sqrt(static_cast<double>(t)), 1.0, 0.0});
  EXPECT_NEAR(LogLogSlope(synthetic), 0.5, 1e-12);
  EXPECT_TRUE(std::isnan(LogLogSlope({synthetic[0]})));
}

}  // namespace
}  // namespace olb
