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
#include <random>
#include <vector>

#include "olb/engine.h"

namespace olb {

// Loads and allocations are drawn from std::mt19937_64, whose output sequence
// is fixed by the C++ standard. Uniform doubles take the top 53 bits of one
// draw, so streams reproduce across platforms and standard libraries.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Independent uniform loads on [0,1].
class IidUniformEnvironment final : public Environment {
 public:
  IidUniformEnvironment(std::size_t k, std::uint64_t seed) : k_(k), rng_(seed) {}
  std::size_t dim() const override { return k_; }
  LoadVector NextLoad(std::size_t t, const Allocation& alpha) override;

 private:
  std::size_t k_;
  PortableRng rng_;
};

// l_{t,i} = 1 with probability rates[i], else 0.
class BernoulliEnvironment final : public Environment {
 public:
  BernoulliEnvironment(std::vector<double> rates, std::uint64_t seed);
  std::size_t dim() const override { return rates_.size(); }
  LoadVector NextLoad(std::size_t t, const Allocation& alpha) override;

 private:
  std::vector<double> rates_;
  PortableRng rng_;
};

// One hot server that moves every `period` rounds: l_t = e_{((t-1)/period) mod K}.
class RotatingSpikeEnvironment final : public Environment {
 public:
  RotatingSpikeEnvironment(std::size_t k, std::size_t period);
  std::size_t dim() const override { return k_; }
  LoadVector NextLoad(std::size_t t, const Allocation& alpha) override;

 private:
  std::size_t k_;
  std::size_t period_;
};

// Puts the whole load on the server the player trusts most (lowest index on ties).
class AdaptiveTargetedEnvironment final : public Environment {
 public:
  explicit AdaptiveTargetedEnvironment(std::size_t k) : k_(k) {}
  std::size_t dim() const override { return k_; }
  LoadVector NextLoad(std::size_t t, const Allocation& alpha) override;

 private:
  std::size_t k_;
};

// Replays a fixed list of loads, cycling when it runs out.
class ScriptedEnvironment final : public Environment {
 public:
  explicit ScriptedEnvironment(std::vector<LoadVector> loads);
  std::size_t dim() const override { return loads_.front().size(); }
  LoadVector NextLoad(std::size_t t, const Allocation& alpha) override;

 private:
  std::vector<LoadVector> loads_;
};

}  // namespace olb
