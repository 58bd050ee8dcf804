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

#include <string>
#include <string_view>
#include <utility>

#include "olb/engine.h"

namespace olb {

// Plays a fixed allocation every round.
class StaticPlayer final : public Player {
 public:
  explicit StaticPlayer(Allocation alpha, std::string name = "static")
      : alpha_(std::move(alpha)), name_(std::move(name)) {}

  std::string_view name() const override { return name_; }
  RoundRecord PlayRound(std::size_t t, Environment& env) override;

 private:
  Allocation alpha_;
  std::string name_;
};

// Follow-the-leader on C*: plays the hindsight-optimal allocation for the
// loads seen so far, smoothed by epsilon = 1e-9 per server.
class HindsightFollowerPlayer final : public Player {
 public:
  explicit HindsightFollowerPlayer(std::size_t k) : cum_load_(k, 0.0) {}

  std::string_view name() const override { return "hindsight_follower"; }
  RoundRecord PlayRound(std::size_t t, Environment& env) override;

 private:
  static constexpr double kSmoothing = 1e-9;
  Vector cum_load_;
};

}  // namespace olb
