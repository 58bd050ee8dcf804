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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olb/engine.h"

namespace olb {

// Environment selector. Textual form, shared by the CLI and JSON configs:
//   iid_uniform | bernoulli(r1,...,rK) | rotating_spike[(period)] | adaptive_targeted
// A single Bernoulli rate is broadcast to every server.
struct EnvSpec {
  enum class Kind { kIidUniform, kBernoulli, kRotatingSpike, kAdaptiveTargeted };

  Kind kind = Kind::kIidUniform;
  std::vector<double> rates;
  std::size_t period = 1;

  static EnvSpec Parse(std::string_view text);
  std::string ToString() const;
};

enum class PlayerKind { kAlgorithm1, kStaticUniform, kHindsightFollower };

PlayerKind ParsePlayerKind(std::string_view text);
std::string_view PlayerKindName(PlayerKind kind);

struct GameConfig {
  std::size_t k = 2;
  std::size_t t = 1;
  std::uint64_t seed = 0;
  EnvSpec env;
  PlayerKind player = PlayerKind::kAlgorithm1;
  std::optional<double> eta_override;
  double tol = 1e-6;
  std::string out_path;

  // Throws ConfigError for k < 2, t < 1, tol outside (0, 1e-3], bad env
  // parameters or a non-positive eta.
  void Validate() const;
};

// JSON object with the GameConfig field names; absent fields keep the values
// already in `base`.
GameConfig GameConfigFromJson(std::string_view json, GameConfig base = {});
GameConfig LoadGameConfig(const std::string& path, GameConfig base = {});
std::string GameConfigToJson(const GameConfig& config);

std::unique_ptr<Environment> MakeEnvironment(const GameConfig& config);
std::unique_ptr<Player> MakePlayer(const GameConfig& config);

// Validates, builds environment and player, and plays the game.
RegretTrace RunConfig(const GameConfig& config, const RunOptions& options = {});

}  // namespace olb
