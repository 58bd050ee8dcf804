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

// olb: run load-balancing games, sweep horizons, check bounds, self-test.
//
// Exit codes: 0 success, 1 bound violation, 2 invalid config, 3 oracle failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "olb/config.h"
#include "olb/error.h"
#include "olb/experiment.h"
#include "olb/trace_io.h"
#include "olb/validation.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBound = 1;
constexpr int kExitConfig = 2;
constexpr int kExitOracle = 3;

struct GameFlags {
  std::size_t k = 0;
  std::string t;
  std::uint64_t seed = 0;
  std::string env;
  std::string player;
  double eta = 0.0;
  double tol = 0.0;
  std::string out;
  std::string config;
  std::string json_out;
};

struct GameOptions {
  CLI::Option* k;
  CLI::Option* t;
  CLI::Option* seed;
  CLI::Option* env;
  CLI::Option* player;
  CLI::Option* eta;
  CLI::Option* tol;
  CLI::Option* out;
};

GameOptions AddGameFlags(CLI::App* app, GameFlags& f, const std::string& t_help) {
  GameOptions o;
  o.k = app->add_option("--k", f.k, "server count (>= 2)");
  o.t = app->add_option("--t", f.t, t_help);
  o.seed = app->add_option("--seed", f.seed, "64-bit seed");
  o.env = app->add_option("--env", f.env,
                          "iid_uniform | bernoulli(r,...) | rotating_spike[(period)] | adaptive_targeted");
  o.player = app->add_option("--player", f.player, "algorithm1 | static_uniform | hindsight_follower");
  o.eta = app->add_option("--eta", f.eta, "learning-rate override");
  o.tol = app->add_option("--tol", f.tol, "support oracle tolerance in (0, 1e-3]");
  o.out = app->add_option("--out", f.out, "output CSV path (stdout when absent)");
  app->add_option("--config", f.config, "JSON file with GameConfig fields; flags override it");
  return o;
}

std::size_t ParseCount(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') {
    throw olb::ConfigError("not a non-negative integer: '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> ParseHorizons(const std::string& s) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = std::min(s.find(',', start), s.size());
    out.push_back(ParseCount(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

// File values first, then explicitly given flags.
olb::GameConfig BuildConfig(const GameFlags& f, const GameOptions& o, bool t_is_list) {
  olb::GameConfig c;
  if (!f.config.empty()) c = olb::LoadGameConfig(f.config, c);
  if (o.k->count()) c.k = f.k;
  if (o.t->count() && !t_is_list) c.t = ParseCount(f.t);
  if (o.seed->count()) c.seed = f.seed;
  if (o.env->count()) c.env = olb::EnvSpec::Parse(f.env);
  if (o.player->count()) c.player = olb::ParsePlayerKind(f.player);
  if (o.eta->count()) c.eta_override = f.eta;
  if (o.tol->count()) c.tol = f.tol;
  if (o.out->count()) c.out_path = f.out;
  return c;
}

int Report(const olb::BoundReport& report, const std::string& trace_path) {
  std::cout << olb::FormatBoundReport(report);
  if (report.passed && report.chain_passed) return kExitOk;
  std::cerr << "bound violated; trace: " << (trace_path.empty() ? "(stdout)" : trace_path) << '\n';
  return kExitBound;
}

int RunCommand(const GameFlags& f, const GameOptions& o) {
  const olb::GameConfig config = BuildConfig(f, o, false);
  olb::RunOptions options;
  options.keep_rounds = !f.json_out.empty();
  const olb::RegretTrace trace = olb::RunConfig(config, options);

  if (config.out_path.empty()) {
    olb::WriteTraceCsv(trace, std::cout);
  } else {
    olb::WriteTraceCsvFile(trace, config.out_path);
  }
  if (!f.json_out.empty()) {
    std::ofstream json(f.json_out, std::ios::binary);
    if (!json) throw olb::ConfigError("cannot write '" + f.json_out + "'");
    olb::WriteTraceJson(trace, json);
  }

  // The bound only applies to the algorithm with its default step size.
  if (config.player != olb::PlayerKind::kAlgorithm1 || config.eta_override) return kExitOk;
  const olb::BoundReport report = olb::CheckBound(trace.rows, config.tol);
  std::ostream& log = config.out_path.empty() ? std::cerr : std::cout;
  log << olb::FormatBoundReport(report);
  if (report.passed && report.chain_passed) return kExitOk;
  std::cerr << "bound violated; trace: " << (config.out_path.empty() ? "(stdout)" : config.out_path)
            << '\n';
  return kExitBound;
}

int SweepCommand(const GameFlags& f, const GameOptions& o, unsigned workers) {
  const olb::GameConfig base = BuildConfig(f, o, true);
  if (!o.t->count()) throw olb::ConfigError("sweep needs --t with a comma-separated list");
  const std::vector<std::size_t> horizons = ParseHorizons(f.t);
  for (std::size_t t : horizons) {
    olb::GameConfig probe = base;
    probe.t = t;
    probe.Validate();
  }
  const std::vector<olb::SweepRow> rows = olb::RunSweep(base, horizons, workers);
  if (base.out_path.empty()) {
    olb::WriteSweepCsv(rows, std::cout);
  } else {
    std::ofstream out(base.out_path, std::ios::binary);
    if (!out) throw olb::ConfigError("cannot write '" + base.out_path + "'");
    olb::WriteSweepCsv(rows, out);
  }
  std::cerr << "log-log slope " << olb::FormatSignificant(olb::LogLogSlope(rows)) << '\n';
  return kExitOk;
}

int SelftestCommand(std::uint64_t seed) {
  bool all = true;
  for (const olb::CheckResult& r : olb::RunSelfTest(seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online load balancing through approachability"};
  app.require_subcommand(1);

  GameFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "play one game and write its trace CSV");
  const GameOptions run_opts = AddGameFlags(run, run_flags, "horizon");
  run->add_option("--json-out", run_flags.json_out, "also write full round records as JSON");

  GameFlags sweep_flags;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* sweep = app.add_subcommand("sweep", "run one game per horizon, emit T,regret,bound,ratio");
  const GameOptions sweep_opts = AddGameFlags(sweep, sweep_flags, "comma-separated horizons");
  sweep->add_option("--workers", workers, "parallel games");

  std::string trace_path;
  double chain_tol = 1e-6;
  CLI::App* check = app.add_subcommand("check-bound", "check a trace CSV against the regret bound");
  check->add_option("trace", trace_path, "trace CSV")->required();
  check->add_option("--tol", chain_tol, "per-round support tolerance used for the chain check");

  std::uint64_t selftest_seed = 20260101;
  CLI::App* selftest = app.add_subcommand("selftest", "cross-validate the oracles against grid search");
  selftest->add_option("--seed", selftest_seed, "seed for the random draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) return RunCommand(run_flags, run_opts);
    if (*sweep) return SweepCommand(sweep_flags, sweep_opts, workers);
    if (*check) return Report(olb::CheckBound(olb::ReadTraceCsvFile(trace_path), chain_tol), trace_path);
    if (*selftest) return SelftestCommand(selftest_seed);
  } catch (const olb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const olb::DimensionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const olb::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "oracle failure: " << e.what() << '\n';
    return kExitOracle;
  }
  return kExitOk;
}
