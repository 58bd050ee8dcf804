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

#include "olb/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "olb/environments.h"
#include "olb/error.h"
#include "olb/players.h"

namespace olb {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double ParseDouble(std::string_view s) {
  s = Trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::size_t ParseCount(std::string_view s) {
  s = Trim(s);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

std::string FormatDouble(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

EnvSpec EnvSpec::Parse(std::string_view text) {
  text = Trim(text);
  std::string_view name = text;
  std::string_view args;
  const bool has_args = text.find('(') != std::string_view::npos;
  if (has_args) {
    const auto open = text.find('(');
    if (text.back() != ')') throw ConfigError("malformed environment '" + std::string(text) + "'");
    name = Trim(text.substr(0, open));
    args = text.substr(open + 1, text.size() - open - 2);
  }
  std::vector<std::string_view> parts;
  if (has_args) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = args.find(',', start);
      parts.push_back(args.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  EnvSpec spec;
  if (name == "iid_uniform" || name == "adaptive_targeted") {
    if (has_args) throw ConfigError(std::string(name) + " takes no parameters");
    spec.kind = name == "iid_uniform" ? Kind::kIidUniform : Kind::kAdaptiveTargeted;
  } else if (name == "bernoulli") {
    if (!has_args) throw ConfigError("bernoulli needs rates, e.g. bernoulli(0.2,0.8)");
    spec.kind = Kind::kBernoulli;
    for (std::string_view p : parts) spec.rates.push_back(ParseDouble(p));
  } else if (name == "rotating_spike") {
    spec.kind = Kind::kRotatingSpike;
    if (has_args) {
      if (parts.size() != 1) throw ConfigError("rotating_spike takes one period");
      spec.period = ParseCount(parts.front());
    }
  } else {
    throw ConfigError("unknown environment '" + std::string(name) + "'");
  }
  return spec;
}

std::string EnvSpec::ToString() const {
  switch (kind) {
    case Kind::kIidUniform:
      return "iid_uniform";
    case Kind::kAdaptiveTargeted:
      return "adaptive_targeted";
    case Kind::kRotatingSpike:
      return "rotating_spike(" + std::to_string(period) + ")";
    case Kind::kBernoulli: {
      std::string out = "bernoulli(";
      for (std::size_t i = 0; i < rates.size(); ++i) out += (i ? "," : "") + FormatDouble(rates[i]);
      return out + ")";
    }
  }
  return {};
}

PlayerKind ParsePlayerKind(std::string_view text) {
  text = Trim(text);
  if (text == "algorithm1") return PlayerKind::kAlgorithm1;
  if (text == "static_uniform") return PlayerKind::kStaticUniform;
  if (text == "hindsight_follower") return PlayerKind::kHindsightFollower;
  throw ConfigError("unknown player '" + std::string(text) + "'");
}

std::string_view PlayerKindName(PlayerKind kind) {
  switch (kind) {
    case PlayerKind::kAlgorithm1:
      return "algorithm1";
    case PlayerKind::kStaticUniform:
      return "static_uniform";
    case PlayerKind::kHindsightFollower:
      return "hindsight_follower";
  }
  return "";
}

void GameConfig::Validate() const {
  if (k < 2) throw ConfigError("k must be at least 2");
  if (t < 1) throw ConfigError("t must be at least 1");
  if (!(tol > 0.0 && tol <= 1e-3)) throw ConfigError("tol must lie in (0, 1e-3]");
  if (eta_override && !(*eta_override > 0.0)) throw ConfigError("eta must be positive");
  if (env.kind == EnvSpec::Kind::kBernoulli) {
    if (env.rates.size() != 1 && env.rates.size() != k) {
      throw ConfigError("bernoulli needs one rate or exactly k rates");
    }
    for (double r : env.rates) {
      if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("bernoulli rates must lie in [0,1]");
    }
  }
  if (env.kind == EnvSpec::Kind::kRotatingSpike && env.period < 1) {
    throw ConfigError("rotating_spike period must be at least 1");
  }
}

namespace {

std::uint64_t Unsigned(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw ConfigError("config field '" + key + "' must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

}  // namespace

GameConfig GameConfigFromJson(std::string_view json, GameConfig base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "k") {
        base.k = Unsigned(value, key);
      } else if (key == "t") {
        base.t = Unsigned(value, key);
      } else if (key == "seed") {
        base.seed = Unsigned(value, key);
      } else if (key == "env") {
        base.env = EnvSpec::Parse(value.get<std::string>());
      } else if (key == "player") {
        base.player = ParsePlayerKind(value.get<std::string>());
      } else if (key == "eta_override") {
        if (value.is_null()) {
          base.eta_override.reset();
        } else {
          base.eta_override = value.get<double>();
        }
      } else if (key == "tol") {
        base.tol = value.get<double>();
      } else if (key == "out_path") {
        base.out_path = value.get<std::string>();
      } else {
        throw ConfigError("unknown config field '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") + e.what());
  }
  return base;
}

GameConfig LoadGameConfig(const std::string& path, GameConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return GameConfigFromJson(buffer.str(), std::move(base));
}

std::string GameConfigToJson(const GameConfig& config) {
  nlohmann::json doc;
  doc["k"] = config.k;
  doc["t"] = config.t;
  doc["seed"] = config.seed;
  doc["env"] = config.env.ToString();
  doc["player"] = std::string(PlayerKindName(config.player));
  doc["eta_override"] = config.eta_override ? nlohmann::json(*config.eta_override) : nlohmann::json();
  doc["tol"] = config.tol;
  doc["out_path"] = config.out_path;
  return doc.dump(2);
}

std::unique_ptr<Environment> MakeEnvironment(const GameConfig& config) {
  switch (config.env.kind) {
    case EnvSpec::Kind::kIidUniform:
      return std::make_unique<IidUniformEnvironment>(config.k, config.seed);
    case EnvSpec::Kind::kBernoulli: {
      std::vector<double> rates = config.env.rates;
      if (rates.size() == 1) rates.assign(config.k, rates.front());
      return std::make_unique<BernoulliEnvironment>(std::move(rates), config.seed);
    }
    case EnvSpec::Kind::kRotatingSpike:
      return std::make_unique<RotatingSpikeEnvironment>(config.k, config.env.period);
    case EnvSpec::Kind::kAdaptiveTargeted:
      return std::make_unique<AdaptiveTargetedEnvironment>(config.k);
  }
  throw ConfigError("unknown environment kind");
}

std::unique_ptr<Player> MakePlayer(const GameConfig& config) {
  switch (config.player) {
    case PlayerKind::kAlgorithm1: {
      EngineConfig engine;
      engine.k = config.k;
      engine.horizon = config.t;
      engine.eta = config.eta_override;
      engine.support.tol = config.tol;
      engine.support.seed = config.seed;
      return std::make_unique<Algorithm1Engine>(engine);
    }
    case PlayerKind::kStaticUniform:
      return std::make_unique<StaticPlayer>(Allocation::Uniform(config.k), "static_uniform");
    case PlayerKind::kHindsightFollower:
      return std::make_unique<HindsightFollowerPlayer>(config.k);
  }
  throw ConfigError("unknown player kind");
}

RegretTrace RunConfig(const GameConfig& config, const RunOptions& options) {
  config.Validate();
  auto env = MakeEnvironment(config);
  auto player = MakePlayer(config);
  return RunGame(config.k, config.t, *env, *player, options);
}

}  // namespace olb
